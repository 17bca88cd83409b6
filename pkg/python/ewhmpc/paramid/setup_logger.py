import logging
logger = logging.getLogger('ewhmpc.paramid')

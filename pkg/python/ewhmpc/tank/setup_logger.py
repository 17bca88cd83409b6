import logging
logger = logging.getLogger('ewhmpc.tank')

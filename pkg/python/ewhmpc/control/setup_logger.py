import logging
logger = logging.getLogger('ewhmpc.control')

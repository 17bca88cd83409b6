import logging
logger = logging.getLogger('ewhmpc.harness')

import logging
logger = logging.getLogger('ewhmpc.qp')

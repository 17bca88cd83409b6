import sys
import argparse
import traceback

from ..setup_logger import logger
from ..units import UnitError
from ..util import ConfigError
from .configurations import COMMANDS
from .script import CheckFailedError

EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2
EXIT_CHECK_FAILED = 3

def create_parser():
    parser = argparse.ArgumentParser(prog='ewhmpc', description='Water heater MPC toolkit.')
    subparsers = parser.add_subparsers(dest='command', required=True)
    scripts = {}
    for name, c in COMMANDS.items():
        sp = subparsers.add_parser(name, help=c['help'], formatter_class=argparse.RawTextHelpFormatter)
        script = c['type']()
        script.add_args(sp)
        scripts[name] = script
    return parser, scripts

def main(argv=None):
    parser, scripts = create_parser()
    args = vars(parser.parse_args(argv))
    script = scripts[args['command']]

    try:
        script.execute(args)
    except (ConfigError, UnitError) as ex:
        logger.error(f'Configuration error: {ex}')
        print(f'Configuration error: {ex}', file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except CheckFailedError as ex:
        print(str(ex), file=sys.stderr)
        return EXIT_CHECK_FAILED
    except Exception as ex:
        logger.error(traceback.format_exc())
        print(f'Error: {ex}', file=sys.stderr)
        return EXIT_RUNTIME_ERROR

    return EXIT_SUCCESS

if __name__ == '__main__':
    sys.exit(main())

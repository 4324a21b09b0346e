"""This is the main function script"""

import importlib
import sys
import time

from commands import CHECK_FAILED, USAGE_ERROR

# lookups of unknown names and malformed geometry are usage errors
USAGE_ERRORS = (KeyError, ValueError)


def main(argv=None):
    from utilities.args import prepare_experiment
    from compiler.build import UnverifiedChainError
    args = prepare_experiment(argv)
    start = time.perf_counter()
    try:
        command = importlib.import_module('commands.' + args.command)
    except ImportError:
        sys.exit("Wrong command!")
    try:
        status = command.run(args)
    except UnverifiedChainError as e:
        print("Error: {}".format(e), file=sys.stderr)
        status = CHECK_FAILED
    except USAGE_ERRORS as e:
        print("Error: {}".format(e), file=sys.stderr)
        status = USAGE_ERROR
    finish = time.perf_counter()
    if args.format == 'text':
        print('Total_time=' + str(' % .3f' % (finish - start)))
    return status


if __name__ == '__main__':
    sys.exit(main())

import logging
import sys

from cli.main import run
from dictionary.vars import LOG_FORMAT, LOG_LEVEL


logging.basicConfig(level=LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))

import sys

from classica.commands.command_processor import dispatch

if __name__ == "__main__":
    sys.exit(dispatch(sys.argv[1:]))

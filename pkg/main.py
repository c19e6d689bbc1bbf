''' Main project executable dispatching the membrane profile subcommands '''
import sys
from _cli.cli import dispatch


def main():
    """ Main function to parse the command line and run the requested subcommand """
    sys.exit(dispatch(sys.argv[1:]))

if __name__ == "__main__":
    main()

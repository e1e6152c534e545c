# __main__.py
# Libraries
import sys
# Personal libraries
from cli import main

if __name__ == '__main__':
    sys.exit(main())

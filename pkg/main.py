"""Command line entry point.

    python main.py vertex|verify|global|serve ...
"""

from cy4vertex.cli import main


if __name__ == '__main__':
    main()

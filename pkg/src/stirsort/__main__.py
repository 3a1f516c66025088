"""Main entry point for stirsort package."""

from .cli import main

if __name__ == '__main__':
    main()

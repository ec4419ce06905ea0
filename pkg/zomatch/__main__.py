"""Entry point for python -m zomatch."""

from zomatch.cli import run

if __name__ == "__main__":
    run()

"""
Main entry point for clearlab.
Same as ``python -m clearlab``: loads .env overrides, then hands the arguments to the command line runner.

    python main.py classify --ring "Z/4" --element 2 --property clear
    python main.py decompose --ring "M2(Z)" --matrix "[[1,0],[0,5]]"
    python main.py survey --n-max 60 --format text
"""
from clearlab.cli import main


if __name__ == "__main__":
    main()

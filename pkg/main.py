#!/usr/bin/env python3
"""
Main entry point for the monideal package.

Runs the command-line interface, so ``python main.py <subcommand> ...`` is
equivalent to the installed ``monideal`` console script.

Examples
--------
.. code-block:: console

    $ python main.py power --ring x,y --ideal "x" --exp 0
    1
    $ python main.py selftest

See Also
--------
monideal.cli : subcommands, output modes and exit codes
"""

from monideal.cli import main

if __name__ == "__main__":
    main()

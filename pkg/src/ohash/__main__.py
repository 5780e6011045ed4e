"""Allow ``python -m ohash`` as an alias for the ``ohash`` console script."""

from .cli import console_main

console_main()

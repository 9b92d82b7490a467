"""Allow running as `python -m hlindex`."""

from hlindex.cli import main

main()

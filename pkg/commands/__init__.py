"""One module per subcommand; each exposes run(args) -> exit status."""

SUCCESS = 0
CHECK_FAILED = 1
USAGE_ERROR = 2

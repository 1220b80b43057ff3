"""
gradpix Command Line
====================

Entry point for the ``gradpix`` command (``python -m gradpix``).

What happens on every invocation:
1. Builds the argument parser (defaults read from GRADPIX_* / .env)
2. Parses arguments; usage errors exit with code 2
3. Configures logging from -v / GRADPIX_LOG_LEVEL
4. Runs the subcommand

Exit codes:
- 0 -> success
- 1 -> runtime failure (any GradpixError) or verify MISMATCH
- 2 -> usage error, or a malformed GRADPIX_* setting
"""

import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from gradpix.cli import build_parser
from gradpix.core.exceptions import GradpixError
from gradpix.core.logging import level_for_verbosity, setup_logging
from gradpix.utils.helpers import format_kv

logger = logging.getLogger(__name__)


# ========================
# 1. RUN ONE COMMAND
# ========================
def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = build_parser()
    except ValidationError as exc:
        for err in exc.errors():
            name = "GRADPIX_" + ".".join(str(part) for part in err["loc"])
            print(f"error: invalid environment setting {name}: {err['msg']}", file=sys.stderr)
        print(format_kv(status="error", command=None))
        return 2

    args = None
    try:
        args = parser.parse_args(argv)
        setup_logging(level_for_verbosity(args.verbose))
        logger.debug("running %s", args.command)
        return args.func(args)
    except SystemExit as exc:
        # argparse: --help / --version exit 0, usage errors exit 2
        return exc.code if isinstance(exc.code, int) else 2
    except GradpixError as exc:
        print(f"error: {exc.detail}", file=sys.stderr)
        print(format_kv(status="error", command=getattr(args, "command", None)))
        return 1


# ========================
# 2. SCRIPT ENTRY
# ========================
if __name__ == "__main__":
    sys.exit(main())

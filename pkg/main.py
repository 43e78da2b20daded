from __future__ import annotations

import sys
import os
import datetime
from singularity_app.cli.app import SingularityCli

APP_VERSION = "1.1.0"

def get_release_date() -> str:
    if getattr(sys, 'frozen', False):
        mtime = os.path.getmtime(sys.executable)
    else:
        mtime = os.path.getmtime(os.path.abspath(__file__))
    return datetime.datetime.fromtimestamp(mtime).strftime('%Y-%b-%d')

def main(argv: list[str] | None = None) -> int:
    cli = SingularityCli(
        version=APP_VERSION,
        release_date=get_release_date(),
    )
    return cli.run(argv)

if __name__ == '__main__':
    sys.exit(main())

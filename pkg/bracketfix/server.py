#!/usr/bin/env python3
"""
Bracket Fixing Server Entry Point
"""

import logging
import sys

from bracketfix.app.mcp_server import app
from bracketfix.config import get_settings

logger = logging.getLogger(__name__)


def main():
    """Main entry point for the bracketfix-server console script"""
    logging.basicConfig(level=get_settings().log_level.upper(), stream=sys.stderr)
    logger.info("Starting Bracket Fixing Solver tool server")
    app.run()


if __name__ == "__main__":
    main()

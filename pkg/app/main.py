"""
Star RGB Toolkit - Main Entry Point
Command-line tool condensing dynamic-gesture clips into star images.

Architecture: Clean Architecture with SOLID principles
- Domain Layer: Entities, repository interfaces, pixel and fusion math
- Application Layer: Encoders, strategies, use cases
- Infrastructure Layer: File-system clip and artifact storage
- Presentation Layer: argparse CLI
"""
import sys
from typing import List, Optional

from app.core.exceptions import ConfigurationError


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI.

    Settings are loaded on first import of the CLI, so a bad STAR_* variable
    surfaces here as ConfigurationError.
    """
    try:
        from app.cli import run
    except ConfigurationError as e:
        sys.stderr.write(f"error: {e.message}: {'; '.join(e.details.get('errors', []))}\n")
        return e.exit_code
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())

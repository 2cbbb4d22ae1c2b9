#!/usr/bin/env python3
"""indubitable 命令行入口，不安装也可运行：python cli.py analyze --family grid:3,4"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent / "src"))

from indubitable.main import cli


if __name__ == "__main__":
    cli()

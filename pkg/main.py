#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
negabeta - 负底数计数系统工具箱入口
Expansions, shift automata and transducers for base -beta.
"""

import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import run


if __name__ == "__main__":
    sys.exit(run())

# tests/__init__.py
import os
import sys

# Permite `python -m tests.test_x` sem instalar o pacote
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'src'))

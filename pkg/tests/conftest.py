import os
import sys

# test-local helper modules (brute.py, rulecases.py) live next to the tests
sys.path.insert(0, os.path.dirname(__file__))

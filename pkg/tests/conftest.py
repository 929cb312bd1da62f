# Loading this file puts tests/ on sys.path, so test modules in subdirectories can import util_test.

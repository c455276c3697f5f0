"""
The examples in README.rst and docs/ run as tests, one test per document.
"""
import pathlib

import manuel.codeblock
import manuel.doctest
import manuel.ignore
import manuel.testing
import pytest

ROOT = pathlib.Path(__file__).parent.parent


def documentation_files():
    docs = ROOT / 'docs'
    files = sorted(p for p in docs.iterdir() if p.suffix in ('.rst', '.txt'))
    files.append(ROOT / 'README.rst')
    return files


def make_manuel_suite(ns, files):
    """
    Create a Manuel suite for the given files and inject one test function
    per file in the given namespace.
    """

    # pytest must not see the "self" argument of runTest
    def _wrapped(func, name):
        wrapped = lambda: func()
        wrapped.__name__ = name
        return wrapped

    m = manuel.ignore.Manuel()
    m += manuel.doctest.Manuel()
    m += manuel.codeblock.Manuel()

    suite = manuel.testing.TestSuite(m, *map(str, files))
    for path, test in zip(files, suite):
        name = 'test_doc_%s' % path.stem.replace('-', '_').lower()
        ns[name] = pytest.mark.documentation(_wrapped(test.runTest, name))
    return suite


try:
    make_manuel_suite(globals(), documentation_files())
except OSError:
    print('Documentation files not found: disabling tests!')

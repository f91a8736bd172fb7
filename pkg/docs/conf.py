# Sphinx configuration for the pyseqarg documentation

import os
import sys

sys.path.insert(0, os.path.abspath('..'))


# -- Project information -----------------------------------------------------

project = 'pyseqarg'
copyright = '2026, the pyseqarg developers'
author = 'the pyseqarg developers'

version = '0.1'
release = '0.1.0'


# -- General configuration ---------------------------------------------------

# napoleon processes Numpy-style docstrings
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
]

source_suffix = '.rst'
master_doc = 'index'
language = "en"
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'


# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'pyseqargdoc'


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'pyseqarg', 'pyseqarg Documentation', [author], 1)
]

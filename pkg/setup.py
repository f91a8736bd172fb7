# For development work, execute this via:
# $ python3 setup.py develop
#
# To generate source distribution
# $ python3 setup.py sdist
#
# To generate pure-Python wheel
# $ python3 setup.py bdist_wheel

import os
import sys
import re, io
from setuptools import setup, find_packages
from setuptools import Command


if not sys.version_info[0] >= 3:
    sys.exit("setup.py: Python 3 required for pyseqarg!")


NAME = "pyseqarg"          # Name for whole project and for "distribution package"
SRC_DIR = "pyseqarg"       # This will be package ("import package") name (e.g., >>> import pyseqarg)


# Modified cleanup command to remove build subdirectory
class CleanCommand(Command):
    description = "custom clean command that forcefully removes dist/build directories"
    user_options = []
    def initialize_options(self):
        self.cwd = None
    def finalize_options(self):
        self.cwd = os.getcwd()
    def run(self):
        assert os.getcwd() == self.cwd, 'Must be in package root: %s' % self.cwd
        os.system('rm -rf ./build ./dist ./*.egg-info')


# Define package metadata
with open("README.md", "r") as f:
    long_description = f.read()

# Get the version string from pyseqarg/__init__.py
__version__ = re.search(
    r'__version__\s*=\s*[\'"]([^\'"]*)[\'"]',  # It excludes inline comment too
    io.open(SRC_DIR + '/__init__.py', encoding='utf_8_sig').read()
    ).group(1)

setup(
    name=NAME,
    version=__version__,
    description="Assumptive sequent-based argumentation, assumption-based argumentation "
                "and MCS reasoning over classical propositional logic",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(),
    package_data={SRC_DIR: ["data/*.txt"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: OS Independent",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Artificial Intelligence",
    ],
    python_requires='>=3.6',
    install_requires=['numpy'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['pyseqarg = pyseqarg.cli:main']},
    cmdclass={'clean': CleanCommand}
)

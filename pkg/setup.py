import setuptools
import subprocess
import shlex

with open("README.md", "r") as fh:
    long_description = fh.read()

def get_version():
    try:
        return subprocess.check_output(shlex.split('git describe --abbrev=0 --tags'), universal_newlines = True, stderr = subprocess.DEVNULL).rstrip('\n')
    except (subprocess.CalledProcessError, OSError):
        return '0.1.0'

setuptools.setup(
    name="truthbench",
    version=get_version(),
    description="Workbench for liar-like sentences: Kripke fixed points, Tarski hierarchies and a provability calculus.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(),
    package_data={'truthbench': ['scenarios/*.sys', 'scenarios/*.proof']},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Operating System :: POSIX :: Linux",
    ],
    scripts = ['bin/truthbench'],
    install_requires=['tqdm', 'pyparsing'],
)

#!/usr/bin/env python3
"""
bracketfix - Demand Tournament Fixing solvers
"""

from setuptools import setup

setup(
    name="bracketfix",
    version="0.1.0",
    description="Demand Tournament Fixing - find single-elimination seedings that realize demanded matches",
    author="Isaac & Claude",
    author_email="isaacwrubin@gmail.com",
    packages=[
        "bracketfix",
        "bracketfix.models",
        "bracketfix.utils",
        "bracketfix.arborescence",
        "bracketfix.exact",
        "bracketfix.fixer",
        "bracketfix.app",
    ],
    install_requires=[
        "fastmcp>=2.0.0",
        "pydantic>=2.0.0",
        "networkx>=3.0",
        "python-dotenv>=1.0.0"
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "bracketfix=bracketfix.app.cli:main",
            "bracketfix-server=bracketfix.server:main",
        ]
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
    ],
)

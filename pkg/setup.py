# ABOUTME: Package setup configuration for the crossed CLI
# ABOUTME: Defines console script entry point and package metadata

from setuptools import setup, find_packages

setup(
    name="crossed-kit",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy==2.1.3",
        "pydantic==2.12.0",
        "pydantic-settings==2.11.0",
        "typer==0.15.1",
        "rich==13.9.4",
    ],
    entry_points={
        "console_scripts": [
            "crossed=cli.main:app",
        ],
    },
    python_requires=">=3.10",
)

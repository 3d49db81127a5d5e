"""Setup configuration for cremona-locus."""

from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="cremona-locus",
    version="0.1.0",
    author="cremona-locus developers",
    description="Dimension, fixed components and base locus of L3(d; m_1..m_8)",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "pydantic>=2.0.0",
        "numpy>=1.24.0",
        "python-dotenv>=1.0.0",
        "langgraph>=0.2.0",
        "sympy>=1.12",
    ],
    extras_require={
        "test": [
            "pytest>=7.4.0",
            "pytest-cov>=4.1.0",
        ],
    },
    entry_points={
        "console_scripts": ["cremona-locus=cremona_locus.cli:run"],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.11",
    ],
)

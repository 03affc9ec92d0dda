from setuptools import setup, find_packages

setup(
    name="heisenberg-residue",
    version="0.1.0",
    packages=find_packages(include=["src", "src.*"]),
    python_requires=">=3.9",
    install_requires=[
        "click",
        "python-dotenv",
        "mpmath",
        "numpy",
        "scipy",
    ],
    entry_points={
        "console_scripts": [
            "heisenberg=src.cli.main:cli",
        ],
    },
)

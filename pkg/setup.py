from setuptools import setup, find_packages

with open("requirements.txt") as f:
    install_requires = f.read().strip().split("\n")

setup(
    name="bidisearch",
    version="0.1.0",
    description="Admissible uni- and bidirectional heuristic search with a benchmark harness",
    author="bidisearch developers",
    packages=find_packages(exclude=["tests"]),
    zip_safe=False,
    include_package_data=True,
    install_requires=install_requires,
    extras_require={"test": ["pytest>=7"]},
    entry_points={"console_scripts": ["bidisearch = bidisearch.bench.cli:main"]},
)

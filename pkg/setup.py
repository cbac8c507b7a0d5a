from setuptools import find_packages, setup

setup(
    name="splitg2",
    version="0.1.0",  # update version in splitg2/version.py
    description="Split octonions as Zorn vector matrices and their derivation algebra split-g2, in exact arithmetic",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    package_data={"splitg2": ["py.typed", "lie/data/*.json"]},
    packages=find_packages(exclude=["tests", "tests.*"]),
    license="Apache License 2.0",
    python_requires=">=3.8",
    install_requires=[
        "pydantic>=2,<3",
        "chevron>=0.14.0",
        "typing_extensions",
        "sympy>=1.12",
    ],
    entry_points={"console_scripts": ["splitg2=splitg2.cli.main:main"]},
)

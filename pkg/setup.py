import pathlib
from setuptools import setup, find_packages

HERE = pathlib.Path(__file__).parent

LONG_DESCRIPTION = (HERE / "README.md").read_text(encoding="utf-8")
VERSION = (HERE / ".version").read_text(encoding="utf-8").strip()
EXTRA_REQUIREMENTS = [
    line.strip()
    for line in (HERE / "requirements-extra.txt").read_text("utf-8").splitlines()
    if line.strip()
]

setup(
    name="storient",
    version=VERSION,
    description="Semi-transitive orientations of small graphs: solver, "
    "orientation-preserving transformations, products and census",
    long_description=LONG_DESCRIPTION,
    long_description_content_type="text/markdown",
    license="Apache-2.0",
    packages=find_packages(exclude=("tests", "docs", "examples", "examples.*")),
    package_data={"storient": ["resources/config/*.json"]},
    include_package_data=True,
    python_requires=">=3.10",
    install_requires=["tqdm", "pandas"],
    extras_require={"tests": EXTRA_REQUIREMENTS},
    entry_points={
        "console_scripts": [
            "storient=storient.cli.storient:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)

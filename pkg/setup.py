from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="stirsort",
    version="0.1.0",
    author="Lance",
    description="Rearrangement costs of well-stirred binary configurations",
    long_description=long_description,
    long_description_content_type="text/markdown",
    url="https://github.com/yourusername/stirsort",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.8",
    install_requires=[
        "pyyaml>=5.1",
        "numpy>=1.20",
    ],
    entry_points={
        "console_scripts": [
            "stirsort=stirsort.cli:main",
        ],
    },
    include_package_data=True,
    data_files=[
        ("share/stirsort", ["config/default.yaml"]),
    ],
)

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

core_sources = [
    "src/graph.cpp",
    "src/word.cpp",
    "src/subgroup.cpp",
    "src/vkd.cpp",
    "src/cayley.cpp",
    "src/families.cpp",
    "src/io.cpp",
    "src/cli.cpp",
]

setup(
    package_dir={"": "python"},
    packages=["racgkit"],
    ext_modules=[
        Pybind11Extension(
            "racgkit._racg",
            sources=["python/module.cpp"] + core_sources,
            include_dirs=["include", "vendor"],
            cxx_std=20,
        )
    ],
    cmdclass={"build_ext": build_ext},
)

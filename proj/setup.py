# SPDX-License-Identifier: Apache-2.0
"""Build the rissim python package by driving the CMake project."""
import pathlib
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = pathlib.Path(__file__).parent.resolve()
        build_dir = pathlib.Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = pathlib.Path(self.get_ext_fullpath(ext.name)).parent.resolve()

        configure = [
            "cmake",
            str(source_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DRISSIM_BUILD_TESTS=OFF",
            "-DRISSIM_BUILD_CLI=OFF",
            "-DRISSIM_BUILD_PYTHON=ON",
            "-DPython3_EXECUTABLE=%s" % sys.executable,
        ]
        subprocess.run(configure, cwd=build_dir, check=True)
        subprocess.run(["cmake", "--build", ".", "--target", "_core", "-j"],
                       cwd=build_dir, check=True)

        out_dir.mkdir(parents=True, exist_ok=True)
        built = build_dir / "python" / "rissim"
        for artifact in built.iterdir():
            (out_dir / artifact.name).write_bytes(artifact.read_bytes())


setup(
    packages=["rissim"],
    package_dir={"rissim": "python/rissim"},
    ext_modules=[CMakeExtension("rissim._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)

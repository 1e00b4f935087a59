# -*- coding: utf-8 -*-

from pathlib import Path
from typing import Final, List

from setuptools import setup

ROOT: Final[Path] = Path(__file__).resolve().parent


def read_requirements(name: str) -> List[str]:
    result = list()
    for line in (ROOT / name).read_text(encoding="utf-8").splitlines():
        requirement = line.split("#", 1)[0].strip()
        if requirement:
            result.append(requirement)
    return result


if __name__ == "__main__":
    setup(
        install_requires=read_requirements("requirements.main.txt"),
        tests_require=read_requirements("requirements.test.txt"),
    )

# Helper script to automatically create the doc folder
# It mirrors the package tree: one index per package, one automodule page per module

#
# Imports
#
import shutil
from pathlib import Path
from typing import List


#
# Constants
#
PROJECT: str = "py_magnetic_ab_flow"

DOC_FOLDER: Path = Path(".") / PROJECT
SRC_FOLDER: Path = Path("..") / PROJECT

DOC_EXT: str = ".rst"
SRC_EXT: str = ".py"

DOC_INDEX_FILE: str = "index" + DOC_EXT

UNDERLINE_CHAR: str = "="

TOCTREE_MAX_DEPTH: int = 10

DOC_FILE_TEMPLATE: str = """{module_name}
{title_underline}

.. automodule:: {module_path}
   :members:
   :undoc-members:
   :show-inheritance:
"""

DOC_INDEX_TEMPLATE: str = """{index_name}
{title_underline}
.. toctree::
   :maxdepth: {toctree_max_depth}

{modules_list}
"""


#
# Functions
#

def is_module_valid(p: Path) -> bool:
    return p.is_file() and p.suffix == SRC_EXT and not p.name.startswith(("_", "."))


def is_package_valid(p: Path) -> bool:
    return p.is_dir() and not p.name.startswith(("_", ".")) and any(list_modules(p) + list_packages(p))


def list_modules(d: Path) -> List[Path]:
    return sorted(p for p in d.iterdir() if is_module_valid(p))


def list_packages(d: Path) -> List[Path]:
    return sorted(p for p in d.iterdir() if is_package_valid(p))


def doc_path(p: Path) -> Path:
    return DOC_FOLDER / p.relative_to(SRC_FOLDER)


def module_path(p: Path) -> str:
    return ".".join((PROJECT,) + p.relative_to(SRC_FOLDER).with_suffix("").parts)


def title(name: str) -> str:
    return name + "\n" + UNDERLINE_CHAR * len(name)


def create_doc_file(f: Path) -> None:
    doc_file = doc_path(f).with_suffix(DOC_EXT)
    name, underline = title(f.stem).split("\n")
    doc_file.write_text(DOC_FILE_TEMPLATE.format(module_name=name,
                                                 title_underline=underline,
                                                 module_path=module_path(f)))
    print(f"Create doc file: {doc_file}")


def create_doc_index(d: Path, dirs: List[Path], files: List[Path]) -> None:
    entries = sorted([f"   {p.name}/{DOC_INDEX_FILE}" for p in dirs] + [f"   {p.stem}" for p in files])
    index_file = doc_path(d) / DOC_INDEX_FILE
    name, underline = title(d.name).split("\n")
    index_file.write_text(DOC_INDEX_TEMPLATE.format(index_name=name,
                                                    title_underline=underline,
                                                    toctree_max_depth=TOCTREE_MAX_DEPTH,
                                                    modules_list="\n".join(entries)))
    print(f"Create index file: {index_file}")


def create_doc(d: Path) -> None:
    doc_path(d).mkdir(parents=True, exist_ok=True)
    files = list_modules(d)
    dirs = list_packages(d)

    for f in files:
        create_doc_file(f)
    create_doc_index(d, dirs, files)
    for sub_dir in dirs:
        create_doc(sub_dir)


#
# Script
#

shutil.rmtree(DOC_FOLDER, ignore_errors=True)
create_doc(SRC_FOLDER)

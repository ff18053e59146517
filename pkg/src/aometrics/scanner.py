"""Source-tree discovery: locate .java/.aj files and group them into versions.

A version is a directory. In single-version mode the given root is the one
version; in versions-root mode every immediate subdirectory is a version.
File lists are always sorted lexicographically by path so a rescan of an
unchanged tree is byte-identical regardless of directory enumeration order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import EmptyCorpus, RootNotFound


class FileKind(Enum):
    JAVA = "java"
    ASPECTJ = "aspectj"
    IGNORED = "ignored"


class ScanMode(Enum):
    SINGLE_VERSION = "single"
    VERSIONS_ROOT = "versions-root"


@dataclass(frozen=True)
class SourceFileRef:
    path: Path
    kind: FileKind
    version_id: str


@dataclass(frozen=True)
class VersionRef:
    id: str
    root: Path
    files: tuple[SourceFileRef, ...]


_EXTENSIONS = {".java": FileKind.JAVA, ".aj": FileKind.ASPECTJ}


def classify_file(path: Path | str) -> FileKind:
    """Classify a path purely by extension, case-insensitively."""
    suffix = Path(path).suffix.lower()
    return _EXTENSIONS.get(suffix, FileKind.IGNORED)


def _collect_files(root: Path, version_id: str) -> list[SourceFileRef]:
    found: list[SourceFileRef] = []
    for dirpath, dirnames, filenames in os.walk(root, followlinks=False):
        # Hidden directories (VCS metadata etc.) are pruned in place.
        dirnames[:] = [d for d in dirnames if not d.startswith(".")]
        for name in filenames:
            path = Path(dirpath) / name
            if path.is_symlink():
                continue
            kind = classify_file(path)
            if kind is FileKind.IGNORED:
                continue
            found.append(SourceFileRef(path=path, kind=kind, version_id=version_id))
    found.sort(key=lambda ref: str(ref.path))
    return found


def scan_corpus(root: Path | str, mode: ScanMode) -> list[VersionRef]:
    """Discover versions under ``root`` and their source files.

    Raises RootNotFound if root is missing or not a directory, and
    EmptyCorpus if no .java/.aj file exists anywhere in the scan.
    """
    root = Path(root).resolve()
    if not root.is_dir():
        raise RootNotFound(f"not a directory: {root}")

    versions: list[VersionRef] = []
    if mode is ScanMode.SINGLE_VERSION:
        files = _collect_files(root, root.name)
        versions.append(VersionRef(id=root.name, root=root, files=tuple(files)))
    else:
        children = sorted(
            (
                child
                for child in root.iterdir()
                if child.is_dir() and not child.is_symlink() and not child.name.startswith(".")
            ),
            key=lambda p: p.name,
        )
        for child in children:
            files = _collect_files(child, child.name)
            versions.append(VersionRef(id=child.name, root=child, files=tuple(files)))

    if not any(version.files for version in versions):
        raise EmptyCorpus(f"no .java or .aj files under {root}")
    return versions

from __future__ import annotations

import csv
import os
import tempfile
from collections.abc import MutableMapping
from typing import Any, Dict, Iterable, List, Sequence

import yaml


class BetterEnum:
    def __iter__(self):
        return [getattr(self, x) for x in dir(self) if ('__' not in x)].__iter__()


def flatten_dict(d, parent_key='', sep='.'):
    items = []
    for k, v in d.items():
        new_key = parent_key + sep + k if parent_key else k
        if isinstance(v, MutableMapping):
            items.extend(flatten_dict(v, new_key, sep=sep).items())
        else:
            items.append((new_key, v))
    return dict(items)


def unflatten_dict(d: Dict[str, Any], sep='.') -> Dict[str, Any]:
    """Inverse of `flatten_dict`: turns dotted keys into nested mappings."""
    result: Dict[str, Any] = {}
    for key, value in d.items():
        *parents, leaf = key.split(sep)
        node = result
        for parent in parents:
            node = node.setdefault(parent, {})
            if not isinstance(node, dict):
                raise ValueError(f'key {key} clashes with a scalar value')
        node[leaf] = value
    return result


def read_config_file(path) -> Dict[str, Any]:
    with open(path) as f:
        content = yaml.safe_load(f.read()) or {}
    if not isinstance(content, dict):
        raise ValueError(f'config file {path} must hold a key/value mapping')
    return unflatten_dict(flatten_dict(content))


class Dumper(yaml.Dumper):
    def increase_indent(self, flow=False, *args, **kwargs):
        return super().increase_indent(flow=flow, indentless=False)


def write_config_file(config: Dict[str, Any], path, header: str = None):
    """Writes `config` as a flat, sorted mapping with dotted keys."""
    content = yaml.dump(
        flatten_dict(config),
        Dumper=Dumper,
        sort_keys=True,
        default_flow_style=False,
        allow_unicode=True,
    )
    if header:
        content = f"# {header}\n" + content
    atomic_write_text(path, content)


def atomic_write_text(path, content: str):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(content)
        os.replace(tmp_path, path)
    except BaseException:
        os.unlink(tmp_path)
        raise


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence[Any]]):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.tmp-')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(header)
            for row in rows:
                writer.writerow([_format_cell(v) for v in row])
        os.replace(tmp_path, path)
    except BaseException:
        os.unlink(tmp_path)
        raise


def read_csv(path) -> List[Dict[str, str]]:
    with open(path, encoding='utf-8', newline='') as f:
        return list(csv.DictReader(f))


def _format_cell(value):
    if isinstance(value, float):
        return repr(value)
    return value

"""Topology and Sasaki-Einstein checks for links of weighted homogeneous singularities."""

import os as _os

_here = _os.path.dirname(__file__)
if "SASAKILINK_DATA_DIR" not in _os.environ and _os.path.isdir(_os.path.join(_here, "data")):
    _os.environ["SASAKILINK_DATA_DIR"] = _os.path.join(_here, "data")

from ._core import Error, analyze, check_table, default_data_dir, verify  # noqa: E402

__all__ = ["Error", "analyze", "check_table", "default_data_dir", "verify"]

# Copyright 2026 The localroots Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Root counting and root finding for polynomials over Q_p and F_q((t)).

Polynomials are passed as text, e.g. ``"x^2 - p*x"`` over Q_p or
``"x^3 + [1,1]*t"`` over F_q((t)). Functions return plain dicts.
"""

import json

from . import _core

__all__ = [
    "LocalRootsError",
    "polygon",
    "regularity",
    "count",
    "discriminant",
    "roots",
    "oracle_count",
    "check_bounds",
    "newton_svg",
    "normalize",
    "run_cli",
]


class LocalRootsError(Exception):
    """Raised for every library failure; carries code, message and detail."""

    def __init__(self, code, message, detail):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.detail = detail


def _call(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except _core.Error as e:
        info = json.loads(str(e))
        raise LocalRootsError(info["code"], info["message"], info["detail"]) from None


def _json(fn):
    def wrapper(*args, **kwargs):
        return json.loads(_call(fn, *args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


polygon = _json(_core.polygon)
regularity = _json(_core.regularity)
count = _json(_core.count)
discriminant = _json(_core.discriminant)
roots = _json(_core.roots)
check_bounds = _json(_core.check_bounds)


def oracle_count(f, p, mode="padic", rdeg=1, budget=10_000_000):
    return _call(_core.oracle_count, f, p, mode, rdeg, budget)


def newton_svg(f, p, mode="padic", rdeg=1):
    return _call(_core.newton_svg, f, p, mode, rdeg)


def normalize(f, p, mode="padic", rdeg=1):
    return _call(_core.normalize, f, p, mode, rdeg)


def run_cli(args):
    """Run the command line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])

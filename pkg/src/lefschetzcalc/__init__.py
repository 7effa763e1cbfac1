"""LefschetzCalc - Abstract Weinstein Lefschetz fibration calculus."""

# Programmed by CoolCat467

from __future__ import annotations

# Copyright (C) 2025  CoolCat467
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public
# License along with this program.  If not, see
# <https://www.gnu.org/licenses/>.

__title__ = "LefschetzCalc"
__author__ = "CoolCat467"
__license__ = "GNU Lesser General Public License Version 3"

from .certificates import (
    Certificate as Certificate,
    CertificateError as CertificateError,
    Verdict as Verdict,
    builtin_certificates as builtin_certificates,
    verify as verify,
)
from .decomposition import (
    ComponentCount as ComponentCount,
    Exactness as Exactness,
    InvariantReport as InvariantReport,
    component_count as component_count,
    index_gaps as index_gaps,
    invariant_report as invariant_report,
)
from .fibration_calculus import (
    AbstractLF as AbstractLF,
    Cycle as Cycle,
    IllegalMoveError as IllegalMoveError,
    Mode as Mode,
    __version__ as __version__,
    apply_move as apply_move,
    canonical_key as canonical_key,
    legal_moves as legal_moves,
    total_space_homology as total_space_homology,
)
from .plumbing_lattice import (
    PlumbingTree as PlumbingTree,
    smith_normal_form as smith_normal_form,
)
from .search import (
    SearchBudget as SearchBudget,
    SearchResult as SearchResult,
    search as search,
)

"""Zigzag persistence barcodes of graph filtrations."""

from .barcode import Barcode, Interval, parse_barcode, serialize_barcode
from .connectivity import DynConn, HandleError
from .duality import DualComplex, DualityError, build_duals, compute_codim1, generate_planar
from .filtration import (Arrow, FiltrationError, Simplex, ZigzagFiltration, format_filtration,
                         parse_filtration, read_filtration, validate, write_filtration)
from .forest import BarcodeForest, MergeResult
from .generate import generate_random
from .msf import DynMsf
from .oracle import OracleError, betti_profile, classify_indices, oracle_barcode
from .script import GraphScript, ScriptBuilder, encode_graph
from .zigzag0 import ZeroState, ZeroStats, compute_barcode0
from .zigzag1 import OneState, PairingError, compute_barcode1

__all__ = [
    "Arrow", "Barcode", "BarcodeForest", "DualComplex", "DualityError", "DynConn", "DynMsf",
    "FiltrationError", "GraphScript", "HandleError", "Interval", "MergeResult", "OneState",
    "OracleError", "PairingError", "ScriptBuilder", "Simplex", "ZeroState", "ZeroStats",
    "ZigzagFiltration", "betti_profile", "build_duals", "classify_indices", "compute_barcode0",
    "compute_barcode1", "compute_codim1", "encode_graph", "format_filtration",
    "generate_planar", "generate_random", "oracle_barcode", "parse_barcode",
    "parse_filtration", "read_filtration", "serialize_barcode", "validate", "write_filtration",
]

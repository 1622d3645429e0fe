"""Boolean logic gates and circuits as ground states of diagonal spin Hamiltonians."""
from .analysis import (InteractionGraph, degree_centrality, export_graph, metrics_table,
                       shortest_path_centrality, to_graph, variance_and_mean)
from .circuits import (CompiledCircuit, Netlist, VerificationReport, compile_netlist,
                       full_adder, half_adder, parse_netlist, ripple_adder, verify)
from .errors import SpinLogicError
from .gates import (NandParams, OrbitPoint, SwapSymmetricCoeffs, XorParams, clamp,
                    gate_by_name, k_copy, nand3local, nand_family, nand_orbit,
                    swap_symmetric, xor3local, xor_family)
from .poly import Assignment, Spectrum, SpinPolynomial, embed, evaluate, spectrum
from .solver import AnnealConfig, SimulatedAnnealer, SolveResult, anneal, read_wires
from .symmetry import (TABLES, SymmetryOp, TruthTable, apply_to_hamiltonian, apply_to_table,
                       group_elements, orbit_of, orbits, stabilizer)

__version__ = "0.1.0"

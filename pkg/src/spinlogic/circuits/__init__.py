from .adders import adder_io, full_adder, half_adder, ripple_adder
from .boolean import evaluate_netlist
from .compiler import CompiledCircuit, Placement, compile_netlist, free_parameter_count
from .netlist import GateInstance, Netlist, parse_netlist
from .verify import VerificationReport, verify

__all__ = [
    "CompiledCircuit", "GateInstance", "Netlist", "Placement", "VerificationReport",
    "adder_io", "compile_netlist", "evaluate_netlist", "free_parameter_count",
    "full_adder", "half_adder", "parse_netlist", "ripple_adder", "verify",
]

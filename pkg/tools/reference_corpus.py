"""Source data for the shipped 25-snippet corpus.

Plain strings are unchanged lines; ``(line, scenario_key, expected)`` tuples
mark lines that must change for 0.46. An empty expected text means removal.
"""
from __future__ import annotations

C = lambda line, key, expected: (line, key, expected)  # noqa: E731

SNIPPETS = {
    "s01": [
        "# Bell state sampled on the reference simulator",
        C("from qiskit import QuantumCircuit, BasicAer", "basicaer",
          "from qiskit import QuantumCircuit\nfrom qiskit.providers.basic_provider import BasicProvider"),
        C("from qiskit import execute", "execute", "from qiskit import transpile"),
        "",
        "qc = QuantumCircuit(2, 2)",
        "qc.h(0)",
        "qc.cx(0, 1)",
        "qc.measure([0, 1], [0, 1])",
        "",
        C('backend = BasicAer.get_backend("qasm_simulator")', "basicaer",
          'backend = BasicProvider().get_backend("basic_simulator")'),
        C("job = execute(qc, backend, shots=2048)", "execute",
          "job = backend.run(transpile(qc, backend), shots=2048)"),
        "counts = job.result().get_counts()",
        "print(counts)",
    ],
    "s02": [
        "import numpy as np",
        C("from qiskit.opflow import PauliSumOp, StateFn, CircuitStateFn", "paulisumop",
          "from qiskit.quantum_info import SparsePauliOp, Statevector"),
        "from qiskit.circuit.library import RealAmplitudes",
        "",
        "ansatz = RealAmplitudes(2, reps=1)",
        "params = np.linspace(0, np.pi, ansatz.num_parameters)",
        "bound = ansatz.assign_parameters(params)",
        "",
        C('hamiltonian = PauliSumOp.from_list([("ZZ", 1.0), ("XI", 0.4)])', "paulisumop",
          'hamiltonian = SparsePauliOp.from_list([("ZZ", 1.0), ("XI", 0.4)])'),
        C("psi = CircuitStateFn(bound)", "statefn", "psi = Statevector(bound)"),
        C("energy = (~StateFn(hamiltonian) @ psi).eval()", "statefn",
          "energy = psi.expectation_value(hamiltonian)"),
        'print(f"energy = {energy.real:.4f}")',
    ],
    "s03": [
        "from qiskit import QuantumCircuit, transpile",
        C("from qiskit.providers.aer import AerSimulator", "providers_aer", "from qiskit_aer import AerSimulator"),
        C("from qiskit.tools.visualization import plot_histogram", "tools_visualization",
          "from qiskit.visualization import plot_histogram"),
        "",
        "# GHZ state on three qubits",
        "ghz = QuantumCircuit(3)",
        "ghz.h(0)",
        "ghz.cx(0, 1)",
        "ghz.cx(1, 2)",
        "ghz.measure_all()",
        "",
        "sim = AerSimulator()",
        "result = sim.run(transpile(ghz, sim), shots=1000).result()",
        'plot_histogram(result.get_counts(), title="GHZ")',
    ],
    "s04": [
        "from qiskit import QuantumCircuit",
        "from qiskit.circuit import Parameter",
        C("from qiskit import Aer, execute", "execute", "from qiskit import transpile\nfrom qiskit_aer import Aer"),
        "",
        'theta = Parameter("θ")',
        "qc = QuantumCircuit(1, 1)",
        "qc.ry(theta, 0)",
        "qc.measure(0, 0)",
        "",
        'backend = Aer.get_backend("qasm_simulator")',
        "for value in (0.0, 0.5, 1.0):",
        C("    bound = qc.bind_parameters({theta: value})", "bind_parameters",
          "    bound = qc.assign_parameters({theta: value})"),
        C("    counts = execute(bound, backend, shots=512).result().get_counts()", "execute",
          "    counts = backend.run(transpile(bound, backend), shots=512).result().get_counts()"),
        "    print(value, counts)",
    ],
    "s05": [
        "# Already compatible with 0.46: primitives and qasm2",
        "from qiskit import QuantumCircuit, qasm2",
        "from qiskit.primitives import Sampler",
        "",
        "qc = QuantumCircuit(2)",
        "qc.h(0)",
        "qc.cx(0, 1)",
        "qc.measure_all()",
        "",
        "print(qasm2.dumps(qc))",
        "quasi = Sampler().run(qc).result().quasi_dists[0]",
        "print(quasi)",
    ],
    "s06": [
        "from qiskit import QuantumCircuit",
        C("from qiskit import IBMQ", "ibmq", "from qiskit_ibm_provider import IBMProvider"),
        C("from qiskit.providers.ibmq import least_busy", "providers_ibmq", "from qiskit_ibm_provider import least_busy"),
        C("from qiskit.tools.monitor import job_monitor", "job_monitor", ""),
        "",
        C("IBMQ.load_account()", "ibmq", "provider = IBMProvider()"),
        C('provider = IBMQ.get_provider(hub="ibm-q")', "ibmq", ""),
        "backend = least_busy(",
        "    provider.backends(simulator=False, operational=True)",
        ")",
        "",
        "qc = QuantumCircuit(2, 2)",
        "qc.h(0)",
        "qc.cx(0, 1)",
        "qc.measure([0, 1], [0, 1])",
        "job = backend.run(qc, shots=1024)",
        C("job_monitor(job)", "job_monitor", "job.wait_for_final_state()"),
        "print(job.result().get_counts())",
    ],
    "s07": [
        "from qiskit import QuantumCircuit",
        "",
        "oracle = QuantumCircuit(4)",
        "oracle.x(3)",
        "oracle.h(3)",
        C("oracle.cnot(0, 3)", "gate_aliases", "oracle.cx(0, 3)"),
        C("oracle.cnot(1, 3)", "gate_aliases", "oracle.cx(1, 3)"),
        C("oracle.toffoli(0, 1, 2)", "gate_aliases", "oracle.ccx(0, 1, 2)"),
        C("oracle.mct([0, 1, 2], 3)", "mct", "oracle.mcx([0, 1, 2], 3)"),
        C("oracle.fredkin(0, 1, 2)", "gate_aliases", "oracle.cswap(0, 1, 2)"),
        "oracle.h(3)",
        'print(oracle.draw(output="text"))',
    ],
    "s08": [
        "import numpy as np",
        "from qiskit.circuit.library import TwoLocal",
        C("from qiskit.algorithms import VQE", "algorithms_pkg", "from qiskit_algorithms import VQE"),
        C("from qiskit.algorithms.optimizers import SPSA", "algorithms_pkg",
          "from qiskit_algorithms.optimizers import SPSA"),
        C("from qiskit.utils import QuantumInstance, algorithm_globals", "quantum_instance",
          "from qiskit.primitives import Estimator\nfrom qiskit_algorithms.utils import algorithm_globals"),
        C("from qiskit.opflow import PauliSumOp", "paulisumop", "from qiskit.quantum_info import SparsePauliOp"),
        C("from qiskit import Aer", "aer_lazy", ""),
        "",
        "algorithm_globals.random_seed = 7",
        C('op = PauliSumOp.from_list([("ZI", -1.05), ("IZ", 0.39), ("XX", 0.18)])', "paulisumop",
          'op = SparsePauliOp.from_list([("ZI", -1.05), ("IZ", 0.39), ("XX", 0.18)])'),
        'ansatz = TwoLocal(2, "ry", "cz", reps=2)',
        C('qi = QuantumInstance(Aer.get_backend("statevector_simulator"))', "quantum_instance", ""),
        C("vqe = VQE(ansatz, optimizer=SPSA(maxiter=100), quantum_instance=qi)", "vqe_primitives",
          "vqe = VQE(Estimator(), ansatz, optimizer=SPSA(maxiter=100))"),
        "result = vqe.compute_minimum_eigenvalue(op)",
        "print(np.round(result.eigenvalue.real, 5))",
    ],
    "s09": [
        C("from qiskit import QuantumCircuit", "circuit_qasm", "from qiskit import QuantumCircuit, qasm2"),
        "",
        "qc = QuantumCircuit(2, 2)",
        "qc.h(0)",
        "qc.cx(0, 1)",
        "qc.measure([0, 1], [0, 1])",
        "",
        "# export for an external OpenQASM 2 toolchain",
        C("program = qc.qasm()", "circuit_qasm", "program = qasm2.dumps(qc)"),
        'with open("bell.qasm", "w") as fh:',
        "    fh.write(program)",
        "print(program)",
    ],
    "s10": [
        "import unittest",
        "",
        "from qiskit import QuantumCircuit, transpile",
        C("from qiskit.test import QiskitTestCase", "qiskit_test", ""),
        C("from qiskit.providers.fake_provider import FakeManila", "fake_v1",
          "from qiskit_ibm_runtime.fake_provider import FakeManilaV2"),
        "",
        "",
        C("class TestTranspile(QiskitTestCase):", "qiskit_test", "class TestTranspile(unittest.TestCase):"),
        "    def test_depth_bound(self):",
        "        qc = QuantumCircuit(3)",
        "        qc.h(0)",
        "        qc.cx(0, 1)",
        "        qc.cx(1, 2)",
        C("        backend = FakeManila()", "fake_v1", "        backend = FakeManilaV2()"),
        "        tqc = transpile(qc, backend, optimization_level=3)",
        "        self.assertLessEqual(tqc.depth(), 12)",
        "",
        "",
        'if __name__ == "__main__":',
        "    unittest.main()",
    ],
    "s11": [
        "# Already compatible with 0.46: BasicProvider and transpile/run",
        "from qiskit import QuantumCircuit, transpile",
        "from qiskit.providers.basic_provider import BasicProvider",
        "",
        "qc = QuantumCircuit(3, 3)",
        "qc.h(range(3))",
        "qc.measure(range(3), range(3))",
        "",
        'backend = BasicProvider().get_backend("basic_simulator")',
        "counts = backend.run(transpile(qc, backend), shots=256).result().get_counts()",
        "print(sorted(counts))",
    ],
    "s12": [
        "import numpy as np",
        "from qiskit import QuantumCircuit",
        "from qiskit.quantum_info import random_unitary",
        "",
        "qc = QuantumCircuit(2)",
        "V = random_unitary(2, seed=3).data[:, :1]",
        C("qc.isometry(V, [0], [])", "isometry_method",
          "qc.append(Isometry(V, 0, 0), [0])"),
        'diag = np.exp(1j * np.array([0.0, 0.3, 0.6, 0.9]))',
        C("qc.diagonal(list(diag), [0, 1])", "diagonal_method", "qc.append(Diagonal(list(diag)), [0, 1])"),
        C('qc.snapshot("after_diag")', "snapshot", 'qc.save_statevector(label="after_diag")'),
        "print(qc.decompose().count_ops())",
    ],
    "s13": [
        C("from qiskit.extensions import UnitaryGate, Initialize", "extensions",
          "from qiskit.circuit.library import UnitaryGate, Initialize"),
        "from qiskit import QuantumCircuit",
        "import numpy as np",
        "",
        "u = np.array([[0, 1], [1, 0]])",
        "qc = QuantumCircuit(2)",
        'qc.append(UnitaryGate(u, label="flip"), [0])',
        "qc.append(Initialize([1, 0]), [1])",
        "print(qc)",
    ],
    "s14": [
        "from qiskit.transpiler import PassManager, CouplingMap",
        C("from qiskit.transpiler.passes import CXDirection, NoiseAdaptiveLayout", "cx_direction",
          "from qiskit.transpiler.passes import GateDirection, VF2Layout"),
        C("from qiskit.transpiler.passes import CrosstalkAdaptiveSchedule", "crosstalk", ""),
        "from qiskit.transpiler.passes import ApplyLayout, SetLayout",
        "",
        "",
        "def build_pass_manager(backend):",
        "    props = backend.properties()",
        "    coupling = CouplingMap(backend.configuration().coupling_map)",
        "    pm = PassManager()",
        C("    pm.append(NoiseAdaptiveLayout(props))", "noise_adaptive",
          "    pm.append(VF2Layout(target=backend.target))"),
        "    pm.append(ApplyLayout())",
        C("    pm.append(CXDirection(coupling))", "cx_direction", "    pm.append(GateDirection(coupling))"),
        C("    pm.append(CrosstalkAdaptiveSchedule(props, {}))", "crosstalk", ""),
        "    return pm",
    ],
    "s15": [
        C("from qiskit import QuantumCircuit, Aer, transpile, assemble", "assemble",
          "from qiskit import QuantumCircuit, transpile\nfrom qiskit_aer import Aer"),
        "",
        "qc = QuantumCircuit(2, 2)",
        "qc.h(0)",
        "qc.cx(0, 1)",
        "qc.measure([0, 1], [0, 1])",
        "",
        'sim = Aer.get_backend("aer_simulator")',
        "tqc = transpile(qc, sim)",
        C("qobj = assemble(tqc, shots=4096)", "assemble", ""),
        C("result = sim.run(qobj).result()", "assemble", "result = sim.run(tqc, shots=4096).result()"),
        "print(result.get_counts())",
    ],
    "s16": [
        C("from qiskit.qasm import Qasm", "legacy_qasm", "from qiskit import qasm2"),
        C("from qiskit.converters import ast_to_dag, dag_to_circuit", "legacy_qasm", ""),
        "",
        'SOURCE = """',
        "OPENQASM 2.0;",
        'include "qelib1.inc";',
        "qreg q[2];",
        "h q[0];",
        "cx q[0], q[1];",
        '"""',
        "",
        C("ast = Qasm(data=SOURCE).parse()", "legacy_qasm", ""),
        C("dag = ast_to_dag(ast)", "legacy_qasm", ""),
        C("circuit = dag_to_circuit(dag)", "legacy_qasm", "circuit = qasm2.loads(SOURCE)"),
        "print(circuit.count_ops())",
    ],
    "s17": [
        "# Already compatible with 0.46: qiskit_aer and qiskit.visualization",
        "from qiskit import QuantumCircuit, transpile",
        "from qiskit_aer import AerSimulator",
        "from qiskit.visualization import plot_histogram",
        "",
        "qc = QuantumCircuit(2)",
        "qc.h(0)",
        "qc.cx(0, 1)",
        "qc.measure_all()",
        "sim = AerSimulator()",
        "counts = sim.run(transpile(qc, sim)).result().get_counts()",
        "plot_histogram(counts)",
    ],
    "s18": [
        "from qiskit import QuantumCircuit, transpile",
        C("from qiskit.utils.mitigation import complete_meas_cal, CompleteMeasFitter", "mitigation",
          "from qiskit_experiments.library import LocalReadoutError"),
        "from qiskit_aer import AerSimulator",
        "",
        "sim = AerSimulator()",
        "qubits = [0, 1]",
        C('cal_circuits, state_labels = complete_meas_cal(qubit_list=qubits, circlabel="mcal")', "mitigation",
          "exp = LocalReadoutError(qubits)"),
        C("cal_results = sim.run(transpile(cal_circuits, sim), shots=1000).result()", "mitigation",
          "cal_data = exp.run(sim).block_for_results()"),
        C('fitter = CompleteMeasFitter(cal_results, state_labels, circlabel="mcal")', "mitigation",
          'mitigator = cal_data.analysis_results("Local Readout Mitigator").value'),
        "",
        "qc = QuantumCircuit(2)",
        "qc.x(0)",
        "qc.measure_all()",
        "raw = sim.run(transpile(qc, sim), shots=1000).result()",
        C("mitigated = fitter.filter.apply(raw)", "mitigation",
          "mitigated = mitigator.quasi_probabilities(raw.get_counts())"),
        "print(mitigated.get_counts())",
    ],
    "s19": [
        C("from qiskit.quantum_info import PauliTable, StabilizerTable", "pauli_table",
          "from qiskit.quantum_info import PauliList"),
        "",
        C('paulis = PauliTable.from_labels(["XX", "YY", "ZZ"])', "pauli_table",
          'paulis = PauliList(["XX", "YY", "ZZ"])'),
        C('stabs = StabilizerTable.from_labels(["+XX", "-ZZ"])', "pauli_table",
          'stabs = PauliList(["+XX", "-ZZ"])'),
        "",
        "for pauli in paulis:",
        "    print(pauli)",
        "print(len(stabs))",
        "print(paulis.commutes_with_all(paulis))",
    ],
    "s20": [
        "from qiskit import QuantumCircuit, transpile",
        C("from qiskit.providers.basicaer import QasmSimulatorPy, StatevectorSimulatorPy", "basicaer_classes",
          "from qiskit.providers.basic_provider import BasicSimulator"),
        "",
        "qc = QuantumCircuit(1)",
        "qc.h(0)",
        "",
        C("sv_backend = StatevectorSimulatorPy()", "basicaer_classes", "sv_backend = BasicSimulator()"),
        "# the statevector result is read from the simulator job",
        C("state = sv_backend.run(transpile(qc, sv_backend)).result().get_statevector()", "basicaer_classes",
          "state = Statevector(qc)"),
        "print(state)",
        "",
        "qc.measure_all()",
        C("counts_backend = QasmSimulatorPy()", "basicaer_classes", "counts_backend = BasicSimulator()"),
        "print(counts_backend.run(transpile(qc, counts_backend)).result().get_counts())",
    ],
    "s21": [
        "import numpy as np",
        "from qiskit import QuantumCircuit",
        C("from qiskit.quantum_info.synthesis import OneQubitEulerDecomposer", "qi_synthesis",
          "from qiskit.synthesis import OneQubitEulerDecomposer"),
        C("from qiskit.quantum_info.synthesis import TwoQubitBasisDecomposer", "qi_synthesis",
          "from qiskit.synthesis import TwoQubitBasisDecomposer"),
        C("from qiskit.transpiler.synthesis import graysynth", "transpiler_synthesis",
          "from qiskit.synthesis import synth_cnot_phase_aam"),
        "from qiskit.circuit.library import CXGate",
        "",
        "decomposer = OneQubitEulerDecomposer(basis='ZYZ')",
        "two_q = TwoQubitBasisDecomposer(CXGate())",
        "cnots = [[0, 1, 1], [1, 0, 1]]",
        'angles = ["s", "t", "z"]',
        C("phase_circuit = graysynth(cnots, angles)", "transpiler_synthesis",
          "phase_circuit = synth_cnot_phase_aam(cnots, angles)"),
        "print(phase_circuit.count_ops())",
        "print(decomposer(np.eye(2)))",
    ],
    "s22": [
        "import qiskit",
        C("import qiskit.tools.jupyter", "jupyter_tools", ""),
        C("from qiskit.tools import parallel_map", "parallel_map", "from qiskit.utils import parallel_map"),
        "from qiskit import QuantumCircuit",
        "",
        "",
        "def build(n):",
        "    qc = QuantumCircuit(n)",
        "    qc.h(range(n))",
        "    return qc",
        "",
        "",
        "circuits = parallel_map(build, list(range(1, 6)))",
        "print([c.num_qubits for c in circuits])",
        "print(qiskit.__version__)",
    ],
    "s23": [
        "# Already compatible with 0.46: parameters, assign_parameters, qasm2 export",
        "from qiskit import QuantumCircuit, qasm2",
        "from qiskit.circuit import Parameter",
        "",
        'phi = Parameter("phi")',
        "qc = QuantumCircuit(1)",
        "qc.rz(phi, 0)",
        "qc.sx(0)",
        "bound = qc.assign_parameters({phi: 0.25})",
        "print(qasm2.dumps(bound))",
    ],
    "s24": [
        "from qiskit import QuantumCircuit",
        C("from qiskit import execute, BasicAer", "execute",
          "from qiskit import transpile\nfrom qiskit.providers.basic_provider import BasicProvider"),
        C("from qiskit.tools.visualization import circuit_drawer", "tools_visualization",
          "from qiskit.visualization import circuit_drawer"),
        "",
        "",
        "def run_teleport(shots=1000):",
        "    qc = QuantumCircuit(3, 3)",
        "    qc.h(1)",
        C("    qc.cnot(1, 2)", "gate_aliases", "    qc.cx(1, 2)"),
        C("    qc.cnot(0, 1)", "gate_aliases", "    qc.cx(0, 1)"),
        "    qc.h(0)",
        "    qc.measure([0, 1], [0, 1])",
        "    qc.cx(1, 2)",
        "    qc.cz(0, 2)",
        "    qc.measure(2, 2)",
        '    circuit_drawer(qc, output="text")',
        C('    backend = BasicAer.get_backend("qasm_simulator")', "basicaer",
          '    backend = BasicProvider().get_backend("basic_simulator")'),
        C("    return execute(qc, backend, shots=shots).result().get_counts()", "execute",
          "    return backend.run(transpile(qc, backend), shots=shots).result().get_counts()"),
        "",
        "",
        "print(run_teleport())",
    ],
    "s25": [
        "from qiskit import QuantumCircuit, transpile",
        C("from qiskit.providers.fake_provider import FakeVigo", "fake_v1",
          "from qiskit_ibm_runtime.fake_provider import FakeVigoV2"),
        "from qiskit.circuit.library import QFT",
        "",
        C("backend = FakeVigo()", "fake_v1", "backend = FakeVigoV2()"),
        "qft = QFT(3)",
        "qft.measure_all()",
        "",
        "best = None",
        "for level in range(4):",
        "    tqc = transpile(qft, backend, optimization_level=level, seed_transpiler=11)",
        "    ops = tqc.count_ops()",
        '    print(level, tqc.depth(), ops.get("cx", 0))',
        '    if best is None or ops.get("cx", 0) < best[1]:',
        '        best = (level, ops.get("cx", 0))',
        "print(best)",
    ],
}

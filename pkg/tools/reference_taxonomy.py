"""Source data for the shipped Qiskit 0.46 migration taxonomy.

Each entry: key, category, flow, summary, artifacts, source example, target
example, difficulty, impact, references. Ids are assigned in list order.
"""
from __future__ import annotations

DOCS = "https://docs.quantum.ibm.com/api/qiskit"
NOTES_046 = f"{DOCS}/release-notes/0.46"
NOTES_045 = f"{DOCS}/release-notes/0.45"
MIGRATION_1 = "https://docs.quantum.ibm.com/api/migration-guides/qiskit-1.0-features"
ALGO_GUIDE = "https://qiskit.org/documentation/migration_guides/algorithms_migration.html"
QI_GUIDE = "https://qiskit.org/documentation/migration_guides/qi_migration.html"
OPFLOW_GUIDE = "https://qiskit.org/documentation/migration_guides/opflow_migration.html"

D, N, S = "Deprecation", "New feature", "Structural change"

SCENARIOS = [
    ("execute", D, "0.45 -> 0.46", "qiskit.execute() deprecated; transpile and call backend.run()",
     ["execute"],
     "from qiskit import execute\njob = execute(qc, backend, shots=1024)",
     "from qiskit import transpile\njob = backend.run(transpile(qc, backend), shots=1024)",
     "Low", "SE: public API removal", [NOTES_046, MIGRATION_1]),
    ("basicaer", D, "0.45 -> 0.46", "BasicAer provider deprecated in favour of BasicProvider",
     ["BasicAer"],
     "from qiskit import BasicAer\nbackend = BasicAer.get_backend('qasm_simulator')",
     "from qiskit.providers.basic_provider import BasicProvider\nbackend = BasicProvider().get_backend('basic_simulator')",
     "Low", "QSE: simulator tooling", [NOTES_046]),
    ("aer_lazy", D, "0.45 -> 0.46", "qiskit.Aer lazy import deprecated; import Aer from qiskit_aer",
     ["Aer"],
     "from qiskit import Aer\nbackend = Aer.get_backend('aer_simulator')",
     "from qiskit_aer import Aer\nbackend = Aer.get_backend('aer_simulator')",
     "Low", "SE: packaging", [NOTES_046]),
    ("ibmq", D, "0.41 -> 0.46", "qiskit.IBMQ provider deprecated; use qiskit_ibm_provider",
     ["IBMQ"],
     "from qiskit import IBMQ\nprovider = IBMQ.load_account()",
     "from qiskit_ibm_provider import IBMProvider\nprovider = IBMProvider()",
     "Medium", "QSE: hardware access", [NOTES_046]),
    ("paulisumop", D, "0.43 -> 0.46", "opflow operators deprecated; PauliSumOp replaced by SparsePauliOp",
     ["PauliSumOp", "opflow"],
     "from qiskit.opflow import PauliSumOp\nop = PauliSumOp.from_list([('ZZ', 1.0)])",
     "from qiskit.quantum_info import SparsePauliOp\nop = SparsePauliOp.from_list([('ZZ', 1.0)])",
     "Medium", "QSE: operator representation", [OPFLOW_GUIDE]),
    ("statefn", D, "0.43 -> 0.46", "opflow state functions deprecated; use quantum_info.Statevector",
     ["StateFn", "CircuitStateFn"],
     "from qiskit.opflow import CircuitStateFn\npsi = CircuitStateFn(qc)",
     "from qiskit.quantum_info import Statevector\npsi = Statevector(qc)",
     "Medium", "QSE: state representation", [OPFLOW_GUIDE]),
    ("quantum_instance", D, "0.44 -> 0.46", "QuantumInstance deprecated; use primitives",
     ["QuantumInstance"],
     "from qiskit.utils import QuantumInstance\nqi = QuantumInstance(backend, shots=1024)",
     "from qiskit.primitives import BackendSampler\nsampler = BackendSampler(backend, options={'shots': 1024})",
     "High", "QSE: execution model", [QI_GUIDE]),
    ("circuit_qasm", D, "0.45 -> 0.46", "QuantumCircuit.qasm() deprecated; use qiskit.qasm2.dumps()",
     ["qasm"],
     "text = qc.qasm()",
     "from qiskit import qasm2\ntext = qasm2.dumps(qc)",
     "Low", "SE: serialization", [NOTES_046]),
    ("bind_parameters", D, "0.45 -> 0.46", "QuantumCircuit.bind_parameters() deprecated; use assign_parameters()",
     ["bind_parameters"],
     "bound = qc.bind_parameters({theta: 0.5})",
     "bound = qc.assign_parameters({theta: 0.5})",
     "Low", "SE: renamed method", [NOTES_045]),
    ("job_monitor", D, "0.45 -> 0.46", "qiskit.tools.job_monitor deprecated; wait on the job directly",
     ["job_monitor"],
     "from qiskit.tools.monitor import job_monitor\njob_monitor(job)",
     "job.wait_for_final_state()",
     "Low", "SE: tooling removal", [NOTES_046]),
    ("jupyter_tools", D, "0.45 -> 0.46", "qiskit.tools.jupyter magics deprecated",
     ["qiskit.tools.jupyter"],
     "import qiskit.tools.jupyter\n%qiskit_version_table",
     "import qiskit\nprint(qiskit.__version__)",
     "Low", "SE: tooling removal", [NOTES_046]),
    ("gate_aliases", D, "0.45 -> 0.46", "QuantumCircuit.cnot/toffoli/fredkin aliases deprecated; use cx/ccx/cswap",
     ["cnot", "toffoli", "fredkin"],
     "qc.cnot(0, 1)\nqc.toffoli(0, 1, 2)\nqc.fredkin(0, 1, 2)",
     "qc.cx(0, 1)\nqc.ccx(0, 1, 2)\nqc.cswap(0, 1, 2)",
     "Low", "SE: renamed method", [NOTES_045]),
    ("mct", D, "0.45 -> 0.46", "QuantumCircuit.mct() deprecated; use mcx()",
     ["mct"],
     "qc.mct([0, 1, 2], 3)",
     "qc.mcx([0, 1, 2], 3)",
     "Low", "SE: renamed method", [NOTES_045]),
    ("qiskit_test", D, "0.45 -> 0.46", "qiskit.test testing utilities deprecated; use unittest directly",
     ["qiskit.test", "QiskitTestCase"],
     "from qiskit.test import QiskitTestCase\nclass TestBell(QiskitTestCase):",
     "import unittest\nclass TestBell(unittest.TestCase):",
     "Low", "SE: test infrastructure", [NOTES_046]),
    ("fake_v1", D, "0.45 -> 0.46", "V1 fake backends in qiskit.providers.fake_provider deprecated",
     ["FakeManila", "FakeVigo", "FakeJakarta"],
     "from qiskit.providers.fake_provider import FakeManila\nbackend = FakeManila()",
     "from qiskit_ibm_runtime.fake_provider import FakeManilaV2\nbackend = FakeManilaV2()",
     "Medium", "QSE: device models", [NOTES_046]),
    ("isometry_method", D, "0.45 -> 0.46", "QuantumCircuit.isometry() deprecated; append the Isometry gate",
     ["isometry"],
     "qc.isometry(V, [0], [1])",
     "from qiskit.circuit.library import Isometry\nqc.append(Isometry(V, 1, 1), [0, 1])",
     "Medium", "QSE: circuit construction", [NOTES_045]),
    ("snapshot", D, "0.44 -> 0.46", "QuantumCircuit.snapshot() deprecated; use Aer save instructions",
     ["snapshot"],
     "qc.snapshot('final')",
     "qc.save_statevector(label='final')",
     "Medium", "QSE: simulator instructions", [NOTES_045]),
    ("extensions", D, "0.45 -> 0.46", "qiskit.extensions deprecated; gates moved to qiskit.circuit.library",
     ["qiskit.extensions"],
     "from qiskit.extensions import UnitaryGate",
     "from qiskit.circuit.library import UnitaryGate",
     "Low", "SE: module relocation", [NOTES_046]),
    ("noise_adaptive", D, "0.45 -> 0.46", "NoiseAdaptiveLayout pass deprecated; use VF2Layout",
     ["NoiseAdaptiveLayout"],
     "from qiskit.transpiler.passes import NoiseAdaptiveLayout\nlayout = NoiseAdaptiveLayout(props)",
     "from qiskit.transpiler.passes import VF2Layout\nlayout = VF2Layout(target=backend.target)",
     "High", "QSE: transpilation", [NOTES_046]),
    ("crosstalk", D, "0.45 -> 0.46", "CrosstalkAdaptiveSchedule pass deprecated without replacement",
     ["CrosstalkAdaptiveSchedule"],
     "from qiskit.transpiler.passes import CrosstalkAdaptiveSchedule\npm.append(CrosstalkAdaptiveSchedule(props, crosstalk))",
     "# CrosstalkAdaptiveSchedule has no replacement; drop the pass",
     "High", "QSE: scheduling", [NOTES_046]),
    ("cx_direction", D, "0.45 -> 0.46", "CXDirection and CheckCXDirection deprecated; use GateDirection",
     ["CXDirection", "CheckCXDirection"],
     "from qiskit.transpiler.passes import CXDirection\npm = PassManager([CXDirection(coupling_map)])",
     "from qiskit.transpiler.passes import GateDirection\npm = PassManager([GateDirection(coupling_map)])",
     "Low", "QSE: transpilation", [NOTES_045]),
    ("linear_synth", D, "0.45 -> 0.46", "LinearFunctionsSynthesis pass deprecated; use HighLevelSynthesis",
     ["LinearFunctionsSynthesis"],
     "from qiskit.transpiler.passes import LinearFunctionsSynthesis\npm = PassManager([LinearFunctionsSynthesis()])",
     "from qiskit.transpiler.passes import HighLevelSynthesis\npm = PassManager([HighLevelSynthesis()])",
     "Medium", "QSE: synthesis", [NOTES_046]),
    ("assemble", D, "0.45 -> 0.46", "Running assembled Qobj on backends deprecated; pass circuits to backend.run()",
     ["assemble"],
     "from qiskit import assemble\nqobj = assemble(tqc, shots=1024)\njob = backend.run(qobj)",
     "job = backend.run(tqc, shots=1024)",
     "Medium", "SE: execution interface", [NOTES_046]),
    ("legacy_qasm", D, "0.45 -> 0.46", "Legacy qiskit.qasm parser and ast_to_dag deprecated; use qiskit.qasm2",
     ["Qasm", "ast_to_dag"],
     "from qiskit.qasm import Qasm\nast = Qasm(data=source).parse()",
     "from qiskit import qasm2\nqc = qasm2.loads(source)",
     "Medium", "SE: parser replacement", [NOTES_046]),
    ("algorithm_globals", D, "0.45 -> 0.46", "qiskit.utils.algorithm_globals deprecated; use qiskit_algorithms.utils",
     ["algorithm_globals"],
     "from qiskit.utils import algorithm_globals\nalgorithm_globals.random_seed = 42",
     "from qiskit_algorithms.utils import algorithm_globals\nalgorithm_globals.random_seed = 42",
     "Low", "SE: module relocation", [ALGO_GUIDE]),
    ("mitigation", D, "0.44 -> 0.46", "qiskit.utils.mitigation fitters deprecated; use qiskit-experiments readout mitigation",
     ["CompleteMeasFitter", "complete_meas_cal"],
     "from qiskit.utils.mitigation import CompleteMeasFitter\nfitter = CompleteMeasFitter(cal_results, state_labels)",
     "from qiskit_experiments.library import LocalReadoutError\nexp = LocalReadoutError(qubits)",
     "High", "QSE: error mitigation", [QI_GUIDE]),
    ("pauli_table", D, "0.43 -> 0.46", "PauliTable and StabilizerTable deprecated; use PauliList",
     ["PauliTable", "StabilizerTable"],
     "from qiskit.quantum_info import PauliTable\ntable = PauliTable.from_labels(['XX', 'ZZ'])",
     "from qiskit.quantum_info import PauliList\ntable = PauliList(['XX', 'ZZ'])",
     "Medium", "QSE: operator representation", [NOTES_045]),
    ("basicaer_classes", D, "0.45 -> 0.46", "BasicAer simulator classes deprecated; use BasicSimulator",
     ["QasmSimulatorPy", "StatevectorSimulatorPy", "UnitarySimulatorPy"],
     "from qiskit.providers.basicaer import QasmSimulatorPy\nbackend = QasmSimulatorPy()",
     "from qiskit.providers.basic_provider import BasicSimulator\nbackend = BasicSimulator()",
     "Low", "QSE: simulator tooling", [NOTES_046]),
    ("diagonal_method", D, "0.45 -> 0.46", "QuantumCircuit.diagonal() deprecated; append the Diagonal gate",
     ["diagonal"],
     "qc.diagonal(diag, [0, 1])",
     "from qiskit.circuit.library import Diagonal\nqc.append(Diagonal(diag), [0, 1])",
     "Medium", "QSE: circuit construction", [NOTES_045]),
    # new features
    ("sampler", N, "0.41 -> 0.46", "Sampler primitive available for quasi-probability sampling",
     ["Sampler"],
     "counts = execute(qc, backend).result().get_counts()",
     "from qiskit.primitives import Sampler\nquasi = Sampler().run(qc).result().quasi_dists[0]",
     "Medium", "QSE: execution model", [f"{DOCS}/primitives"]),
    ("estimator", N, "0.41 -> 0.46", "Estimator primitive available for expectation values",
     ["Estimator"],
     "value = (~StateFn(op) @ CircuitStateFn(qc)).eval()",
     "from qiskit.primitives import Estimator\nvalue = Estimator().run(qc, op).result().values[0]",
     "Medium", "QSE: execution model", [f"{DOCS}/primitives"]),
    ("basic_provider", N, "0.45 -> 0.46", "BasicProvider and BasicSimulator added as the built-in reference simulator",
     ["BasicProvider", "BasicSimulator"],
     "from qiskit import BasicAer\nbackend = BasicAer.get_backend('qasm_simulator')",
     "from qiskit.providers.basic_provider import BasicSimulator\nbackend = BasicSimulator()",
     "Low", "QSE: simulator tooling", [NOTES_046]),
    ("preset_pm", N, "0.43 -> 0.46", "generate_preset_pass_manager exposes the preset transpiler pipelines",
     ["generate_preset_pass_manager"],
     "tqc = transpile(qc, backend, optimization_level=3)",
     "from qiskit.transpiler.preset_passmanagers import generate_preset_pass_manager\npm = generate_preset_pass_manager(3, backend)\ntqc = pm.run(qc)",
     "Medium", "QSE: transpilation", [f"{DOCS}/transpiler_preset"]),
    ("qasm3", N, "0.41 -> 0.46", "qiskit.qasm3 exporter available for OpenQASM 3 output",
     ["qasm3"],
     "text = qc.qasm()",
     "from qiskit import qasm3\ntext = qasm3.dumps(qc)",
     "Low", "SE: serialization", [f"{DOCS}/qasm3"]),
    ("generic_backend", N, "0.45 -> 0.46", "GenericBackendV2 added for configurable fake devices",
     ["GenericBackendV2"],
     "from qiskit.providers.fake_provider import FakeManila\nbackend = FakeManila()",
     "from qiskit.providers.fake_provider import GenericBackendV2\nbackend = GenericBackendV2(num_qubits=5)",
     "Low", "QSE: device models", [NOTES_046]),
    # structural changes
    ("providers_aer", S, "0.41 -> 0.46", "qiskit.providers.aer namespace removed; Aer lives in qiskit_aer",
     ["qiskit.providers.aer"],
     "from qiskit.providers.aer import AerSimulator",
     "from qiskit_aer import AerSimulator",
     "Low", "SE: package split", [NOTES_046]),
    ("algorithms_pkg", S, "0.44 -> 0.46", "qiskit.algorithms moved to the standalone qiskit_algorithms package",
     ["qiskit.algorithms"],
     "from qiskit.algorithms.optimizers import COBYLA",
     "from qiskit_algorithms.optimizers import COBYLA",
     "Medium", "SE: package split", [ALGO_GUIDE]),
    ("qi_synthesis", S, "0.45 -> 0.46", "qiskit.quantum_info.synthesis moved to qiskit.synthesis",
     ["qiskit.quantum_info.synthesis"],
     "from qiskit.quantum_info.synthesis import OneQubitEulerDecomposer",
     "from qiskit.synthesis import OneQubitEulerDecomposer",
     "Low", "SE: module relocation", [NOTES_046]),
    ("tools_visualization", S, "0.44 -> 0.46", "qiskit.tools.visualization merged into qiskit.visualization",
     ["qiskit.tools.visualization"],
     "from qiskit.tools.visualization import plot_histogram",
     "from qiskit.visualization import plot_histogram",
     "Low", "SE: module relocation", [NOTES_046]),
    ("providers_ibmq", S, "0.41 -> 0.46", "qiskit.providers.ibmq helpers moved to qiskit_ibm_provider",
     ["qiskit.providers.ibmq"],
     "from qiskit.providers.ibmq import least_busy",
     "from qiskit_ibm_provider import least_busy",
     "Medium", "QSE: hardware access", [NOTES_046]),
    ("parallel_map", S, "0.45 -> 0.46", "parallel_map moved from qiskit.tools to qiskit.utils",
     ["parallel_map"],
     "from qiskit.tools import parallel_map",
     "from qiskit.utils import parallel_map",
     "Low", "SE: module relocation", [NOTES_046]),
    ("vqe_primitives", S, "0.44 -> 0.46", "VQE takes an Estimator primitive instead of a quantum_instance",
     ["VQE", "quantum_instance"],
     "vqe = VQE(ansatz, optimizer, quantum_instance=qi)",
     "vqe = VQE(Estimator(), ansatz, optimizer)",
     "High", "QSE: algorithm interfaces", [ALGO_GUIDE]),
    ("transpiler_synthesis", S, "0.45 -> 0.46", "qiskit.transpiler.synthesis moved to qiskit.synthesis",
     ["qiskit.transpiler.synthesis", "graysynth"],
     "from qiskit.transpiler.synthesis import graysynth\nqc = graysynth(cnots, angles)",
     "from qiskit.synthesis import synth_cnot_phase_aam\nqc = synth_cnot_phase_aam(cnots, angles)",
     "Medium", "SE: module relocation", [NOTES_046]),
]

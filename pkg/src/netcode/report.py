import json

from .hasher import Hasher
from .utils.report_crasher import ReportCrasher


class RunReport:
    """
    Everything one command produced, in a deterministic order.

    Timing is attached only on request so repeated runs stay byte-identical.
    """

    def __init__(self, command, arguments):
        self.command = command
        self.arguments = dict(arguments)
        self.inputs = {}
        self.outputs = {}
        self.verdict = None
        self.timing = None

    def __repr__(self):
        return f"<{self.__class__.__name__}> -- {self.command}: {sorted(self.outputs)}"

    def add_input(self, name, raw):
        self.inputs[name] = Hasher.raw_bytes_hash(raw)

    @property
    def run_id(self):
        """Digest of the command, its arguments and input digests."""
        return Hasher.raw_config_hash(
            ReportCrasher({"command": self.command, "arguments": self.arguments, "inputs": self.inputs})()
        )

    def dump_config(self):
        document = {
            "command": self.command,
            "run": self.run_id,
            "arguments": self.arguments,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "verdict": self.verdict,
        }
        if self.timing is not None:
            document["timing"] = self.timing
        return ReportCrasher(document)()

    def to_json(self):
        return json.dumps(self.dump_config(), indent=2) + "\n"

    def to_text(self):
        document = self.dump_config()
        lines = [f"[{document['command']}] verdict: {document['verdict']}"]
        for name, digest in document["inputs"].items():
            lines.append(f"  input {name}: sha256 {digest}")
        for key, value in document["outputs"].items():
            lines.append(f"  {key}: {json.dumps(value)}")
        if "timing" in document:
            lines.append(f"  timing: {json.dumps(document['timing'])}")
        return "\n".join(lines) + "\n"

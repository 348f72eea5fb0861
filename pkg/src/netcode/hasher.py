import hashlib
import json


class Hasher:
    @staticmethod
    def raw_bytes_hash(data):
        if isinstance(data, str):
            data = data.encode("utf-8")
        return hashlib.sha256(data).hexdigest()

    @staticmethod
    def raw_config_hash(c):
        return hashlib.sha256(json.dumps(c, sort_keys=True).encode("utf-8")).hexdigest()

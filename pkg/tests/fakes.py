class FakeRedis:
    """Subconjunto da interface de ``redis.Redis`` usado pelo cache."""

    def __init__(self):
        self.store = {}
        self.expirations = {}

    def ping(self):
        return True

    def setex(self, key, seconds, value):
        self.store[key] = value
        self.expirations[key] = seconds

    def get(self, key):
        return self.store.get(key)

    def keys(self, pattern):
        prefix = pattern.rstrip("*")
        return [key for key in self.store if key.startswith(prefix)]

    def delete(self, *keys):
        for key in keys:
            self.store.pop(key, None)


class BrokenRedis(FakeRedis):
    def get(self, key):
        raise ConnectionError("connection refused")

    def setex(self, key, seconds, value):
        raise ConnectionError("connection refused")


class RefusingRedis(FakeRedis):
    def ping(self):
        raise ConnectionError("connection refused")

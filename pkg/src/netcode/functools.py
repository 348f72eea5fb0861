class FuncList:
    """
    Lazy chain over an iterable, used for the line-oriented parsers.

    >>> FuncList(" 1 0 \\n\\n0 1".split("\\n")).map(str.strip).filter(None).to_list()
    ['1 0', '0 1']
    """

    def __init__(self, ldata):
        self.ldata = ldata

    def __iter__(self):
        return iter(self.ldata)

    def to_list(self):
        return list(self.ldata)

    def map(self, func):
        return FuncList(map(func, self.ldata))

    def filter(self, func):
        return FuncList(filter(func, self.ldata))

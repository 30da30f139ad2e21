class RepetitionException(Exception):
    pass


class EmptyWordError(RepetitionException):
    def __init__(self, message="empty word has no period") -> None:
        super().__init__(message)


class PreconditionError(RepetitionException):
    def __init__(self, message, window=None) -> None:
        self.window = window
        super().__init__(message)


class BudgetExhausted(RepetitionException):
    def __init__(self, nodes_visited, message=None) -> None:
        self.nodes_visited = nodes_visited
        if message is None:
            message = "node budget exhausted after %d nodes" % nodes_visited
        super().__init__(message)


class UncoloredVertexError(RepetitionException):
    def __init__(self, vertex) -> None:
        self.vertex = vertex
        super().__init__("vertex %d is not colored" % vertex)


class FormatError(RepetitionException):
    def __init__(self, message, line=None, field=None) -> None:
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append("line %d" % line)
        if field is not None:
            where.append("field '%s'" % field)
        if where:
            message = "%s: %s" % (", ".join(where), message)
        super().__init__(message)


class ConfigException(RepetitionException):
    pass

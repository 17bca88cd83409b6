# Argument helpers with the semantics of `pfs.ga.pfsspec.core.util.args`:
# an argument counts as set only when it is present and not None.

def is_arg(name, args):
    return args is not None and name in args and args[name] is not None

def get_arg(name, old_value, args=None):
    """
    Return the value of a parsed command-line argument, or `old_value` when the
    argument is missing or was not set.
    """

    if is_arg(name, args):
        return args[name]
    else:
        return old_value

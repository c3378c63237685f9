"""
Command groups for hopfwords
"""
from commands.eval_commands import eval_cmd
from commands.check_commands import check_cmd
from commands.hasse_commands import hasse_cmd

# Export all commands
__all__ = ['eval_cmd', 'check_cmd', 'hasse_cmd']

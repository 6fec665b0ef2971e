import enum


class Command(str, enum.Enum):
    FSM = 'fsm'
    DMDP = 'dmdp'
    AMDP = 'amdp'
    GAME22 = 'game22'
    GAME21 = 'game21'
    TOPEV = 'topev'
    TVCHECK = 'tvcheck'
    SWEEP = 'sweep'

    @property
    def instantiation(self) -> bool:
        """Whether the command runs one of the solvers cell by cell."""
        return self not in (Command.TVCHECK, Command.SWEEP)

    @property
    def knob(self) -> str:
        return {
            Command.FSM: 'lambda',
            Command.DMDP: 'gamma_prime',
            Command.AMDP: 'gamma_prime',
            Command.GAME22: 'alpha',
            Command.GAME21: 'alpha',
            Command.TOPEV: 'alpha',
            }.get(self, 'knob')

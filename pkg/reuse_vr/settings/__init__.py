from .settings import (  # noqa: F401
    DiagnosticsSettings,
    FrameworkSettings,
    FsmSettings,
    GamesSettings,
    MdpSettings,
    Settings,
    TopEvSettings,
    default_settings,
    load_settings,
    )

from .discount_clip_warning import DiscountClipWarning  # noqa: F401
from .libyaml_warning import LibYAMLWarning  # noqa: F401
from .shift_warning import ShiftWarning  # noqa: F401

"""Unit test package for quadlcm."""
import os

from quadlcm.config import DESK_SCALE, QUICK_SCALE

# QUADLCM_DESK=full runs every acceptance range at full desk scale.
SCALE = DESK_SCALE if os.environ.get('QUADLCM_DESK') == 'full' else QUICK_SCALE

# -*- coding: utf-8 -*-
from cyclepatterns.exceptions import *
from cyclepatterns.permutation import *
from cyclepatterns.pattern import *
from cyclepatterns.polynomial import *
from cyclepatterns.series import *
from cyclepatterns.enumeration import *
from cyclepatterns.recurrences import *
from cyclepatterns.formulas import *
from cyclepatterns.verify import *
from cyclepatterns.util import *

# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4

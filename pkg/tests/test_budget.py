import pickle
import time

import pytest

from gaussian_ideals.errors import BudgetExceededError
from gaussian_ideals.utils.budget import EffortBudget, active_budget, use_budget


def test_steps_are_counted():
    budget = EffortBudget(max_steps=3)
    budget.spend(2)
    assert budget.steps == 2
    with pytest.raises(BudgetExceededError) as info:
        budget.spend(2)
    assert info.value.limit == 3


def test_positive_step_limit():
    with pytest.raises(ValueError):
        EffortBudget(max_steps=0)


def test_deadline():
    budget = EffortBudget(deadline_seconds=0.001)
    time.sleep(0.01)
    with pytest.raises(BudgetExceededError) as info:
        budget.check_clock()
    assert info.value.resource == "wall-clock seconds"


def test_non_positive_deadline_disables_the_clock():
    budget = EffortBudget(deadline_seconds=0)
    time.sleep(0.001)
    budget.check_clock()


def test_use_budget_restores_previous():
    outer, inner = EffortBudget(), EffortBudget()
    assert active_budget() is None
    with use_budget(outer):
        with use_budget(inner):
            assert active_budget() is inner
        assert active_budget() is outer
    assert active_budget() is None


def test_budget_error_pickles():
    err = pickle.loads(pickle.dumps(BudgetExceededError("lattice points", 10)))
    assert (err.resource, err.limit) == ("lattice points", 10)

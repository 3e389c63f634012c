# Thue's morphisms and square-free words.
from ringwords.morphisms import THUE_BINARY, THUE_TERNARY, crochemore_test, is_power_free, iterate_fixed_point, square_free_word

tm = iterate_fixed_point(THUE_BINARY, "a", 64)
print(tm)
print("cube-free:", is_power_free(tm, 3) is None, " square-free:", is_power_free(tm, 2) is None)

print(crochemore_test(THUE_TERNARY))
w = square_free_word(1000)
print(w[:60], "...", is_power_free(w, 2))

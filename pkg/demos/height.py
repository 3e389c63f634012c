# n-divisibility, height, and fgf factors.
from ringwords.height import height_over, height_survey, is_n_divisible
from ringwords.words import BINARY, fgf_threshold, find_fgf

print(is_n_divisible("abab", 2))
print(is_n_divisible("aabbb", 2))
print(height_over("aabbb", ["a", "b"]))

print(height_survey(BINARY, 3, 10).table())

N = fgf_threshold(BINARY, 10)
print("every binary word of length", N, "contains some f g f")
print(find_fgf("abbab"))

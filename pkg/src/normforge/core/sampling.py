"""
再現可能な乱数源

カウンタ方式の Philox を (seed, ケース番号) から生成するので、
ケースをどのワーカーに割り振っても同じ乱数列になります。
"""

import numpy as np


def case_rng(seed: int, index: int = 0) -> np.random.Generator:
    """(seed, index) に対応する独立な乱数生成器"""
    sequence = np.random.SeedSequence([seed & 0xFFFFFFFFFFFFFFFF, index])
    return np.random.Generator(np.random.Philox(sequence))


def random_mask(rng: np.random.Generator, width: int, density: float = 0.5) -> int:
    """各ビットが確率 density で立つ width ビットのマスク"""
    bits = rng.random(width) < density
    return sum(1 << i for i, bit in enumerate(bits) if bit)


def random_choice_mask(rng: np.random.Generator, width: int, count: int) -> int:
    """width ビット中ちょうど count ビットが立つマスク"""
    count = max(0, min(count, width))
    chosen = rng.choice(width, size=count, replace=False) if count else []
    return sum(1 << int(i) for i in chosen)

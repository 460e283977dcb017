# models/output_models.py

from typing import Dict, List, Optional

from pydantic import BaseModel, Field


class RelatorOutput(BaseModel):
    """
    The relator u_r of the upper presentation for one slope.

    Attributes:
        r: The slope q/p
        word: Compact word, lowercase for a generator and uppercase for its inverse
        tokens: The same word as signed generator tokens
        length: Word length, always 2p
        sseq: S-sequence of the word
    """

    r: str = Field(..., description="The slope q/p")
    word: str = Field(..., description="Compact word, e.g. 'abAB' for a b a^-1 b^-1")
    tokens: List[str] = Field(..., description="Signed generator tokens, e.g. ['a', 'b^-1']")
    length: int = Field(..., description="Word length 2p")
    sseq: List[int] = Field(..., description="S-sequence of the relator")

    class Config:
        json_schema_extra = {
            "example": {
                "r": "1/2",
                "word": "abAB",
                "tokens": ["a", "b", "a^-1", "b^-1"],
                "length": 4,
                "sseq": [2, 2],
            }
        }


class SSeqOutput(BaseModel):
    r: str = Field(..., description="The slope q/p")
    cf: List[int] = Field(..., description="Continued fraction terms of r")
    sseq: List[int] = Field(..., description="S-sequence from the floor-star formula")
    cyclic: List[int] = Field(..., description="Cyclic S-sequence in its least rotation")

    class Config:
        json_schema_extra = {
            "example": {"r": "2/5", "cf": [2, 2], "sseq": [3, 2, 3, 2], "cyclic": [2, 3, 2, 3]}
        }


class DecompositionOutput(BaseModel):
    """
    The splitting of CS(r) into ((S1, S2, S1, S2)) with the cyclic occurrence
    count of each block.
    """

    r: str = Field(..., description="The slope q/p")
    cf: List[int] = Field(..., description="Continued fraction terms of r")
    cs: List[int] = Field(..., description="CS(r) in its least rotation")
    s1: List[int] = Field(..., alias="S1", description="First symmetric block, empty when r = 1/m")
    s2: List[int] = Field(..., alias="S2", description="Second symmetric block")
    occurrences: Dict[str, Optional[int]] = Field(
        ..., description="Cyclic occurrences of S1, S2, (S1,S2) and (S2,S1); S1 is null when empty"
    )
    pattern_word_length: int = Field(..., description="Shortest subword length carrying (S1, S2, l), p + 1")

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {
                "r": "5/17",
                "cf": [3, 2, 2],
                "cs": [3, 3, 4, 3, 4, 3, 3, 4, 3, 4],
                "S1": [4, 3, 4],
                "S2": [3, 3],
                "occurrences": {"S1": 2, "S2": 2, "S1S2": 2, "S2S1": 2},
                "pattern_word_length": 18,
            }
        }


class OrbitOutput(BaseModel):
    """Reduction of s to its canonical representative for the slope r."""

    r: str = Field(..., description="The slope r of the link")
    s: str = Field(..., description="The slope of the loop")
    canonical: str = Field(..., description="The unique element of I1 ∪ I2 ∪ {inf, r} in the orbit of s")
    null_homotopic: bool = Field(..., description="Whether the canonical slope is inf or r")
    trail: List[List[List[int]]] = Field(..., description="Reflection matrices applied to s, in order")

    class Config:
        json_schema_extra = {
            "example": {
                "r": "5/17",
                "s": "7/24",
                "canonical": "3/10",
                "null_homotopic": False,
                "trail": [[[69, -20], [238, -69]]],
            }
        }


class NullHomotopyOutput(BaseModel):
    r: str = Field(..., description="The slope r of the link")
    s: str = Field(..., description="The slope of the loop")
    null_homotopic: bool = Field(..., description="Whether the loop of slope s is null-homotopic")
    canonical: str = Field(..., description="Canonical representative of the orbit of s")

    class Config:
        json_schema_extra = {
            "example": {"r": "5/17", "s": "69/238", "null_homotopic": True, "canonical": "inf"}
        }

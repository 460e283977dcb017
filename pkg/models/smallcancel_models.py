# models/smallcancel_models.py

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from twobridge.smallcancel import PieceStatistics


class PieceReport(BaseModel):
    """
    Outcome of the C(4) and T(4) checks for the symmetrized relator of one slope.

    Attributes:
        r: The slope q/p
        max_piece_length: Length of the longest piece
        min_pieces_per_relator: Fewest pieces whose product is an element of the set, None if no element is a product of pieces
        c4: Whether every element needs at least four pieces
        t4: Whether no cancelling triangle of relators exists
    """

    r: str = Field(..., description="The slope q/p")
    max_piece_length: int = Field(..., alias="max_piece", ge=0, description="Length of the longest piece")
    min_pieces_per_relator: Optional[int] = Field(
        None, alias="min_pieces", ge=1, description="Fewest pieces forming a relator; null if no relator is a product of pieces"
    )
    c4: bool = Field(..., description="C(4) holds")
    t4: bool = Field(..., description="T(4) holds")

    @classmethod
    def from_statistics(cls, statistics: PieceStatistics) -> "PieceReport":
        return cls(
            r=str(statistics.r),
            max_piece_length=statistics.max_piece_length,
            min_pieces_per_relator=statistics.min_pieces_per_relator,
            c4=statistics.c4,
            t4=statistics.t4,
        )

    @model_validator(mode="after")
    def _c4_matches_piece_count(self):
        expected = self.min_pieces_per_relator is None or self.min_pieces_per_relator >= 4
        if self.c4 != expected:
            raise ValueError(f"c4={self.c4} contradicts min_pieces={self.min_pieces_per_relator}")
        return self

    class Config:
        populate_by_name = True
        json_schema_extra = {
            "example": {"r": "2/5", "max_piece": 4, "min_pieces": 4, "c4": True, "t4": True}
        }

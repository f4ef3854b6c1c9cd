# src/spectra/reports/reference.py
"""
Valores publicados das duas tabelas de referência (anel com a = 1 e varredura
em ε no cilindro h = 1, f₀ = sen(πx)cos θ), guardados como texto para que a
banda de comparação conheça o número de casas citadas.
"""

import math
from dataclasses import dataclass
from typing import Dict, Optional


@dataclass(frozen=True)
class QuotedValue:
    """Valor citado com as casas decimais exatamente como publicado."""
    text: str

    @property
    def value(self) -> float:
        return float(self.text)

    @property
    def half_unit(self) -> float:
        """Meia unidade da última casa citada."""
        mantissa = self.text.lower().split("e")[0]
        if "e" in self.text.lower():
            exponent = int(self.text.lower().split("e")[1])
        else:
            exponent = 0
        decimals = len(mantissa.split(".")[1]) if "." in mantissa else 0
        return 0.5 * 10.0 ** (exponent - decimals)

    def band(self, relative: float = 0.0, absolute: float = 0.0) -> float:
        """max(relativa·|valor|, absoluta, meia unidade citada)."""
        return max(relative * abs(self.value), absolute, self.half_unit)

    def agrees(self, computed: float, relative: float = 0.0, absolute: float = 0.0) -> bool:
        return math.isfinite(computed) and abs(computed - self.value) <= self.band(relative, absolute)


def _row(**columns) -> Dict[str, QuotedValue]:
    return {key: QuotedValue(text) for key, text in columns.items()}


# b -> colunas (a = 1)
ANNULUS_TABLE: Dict[float, Dict[str, QuotedValue]] = {
    5.0: _row(E="1.95198", D="1.16432", sqrt_D="1.07904", lambda_ann="0.58246", lambda_cyl="150.42198"),
    10.0: _row(E="1.36438", D="0.58662", sqrt_D="0.76591", lambda_ann="0.10982", lambda_cyl="73.48998"),
    20.0: _row(E="1.04869", D="0.34919", sqrt_D="0.59092", lambda_ann="0.02348", lambda_cyl="43.41637"),
    50.0: _row(E="0.80306", D="0.20520", sqrt_D="0.45299", lambda_ann="0.00333", lambda_cyl="25.45990"),
    100.0: _row(E="0.68219", D="0.14812", sqrt_D="0.38486", lambda_ann="0.00078", lambda_cyl="18.37249"),
    200.0: _row(E="0.59294", D="0.11191", sqrt_D="0.33453", lambda_ann="0.00019", lambda_cyl="13.87981"),
    500.0: _row(E="0.50552", D="0.08134", sqrt_D="0.28521", lambda_ann="0.00003", lambda_cyl="10.08863"),
    1000.0: _row(E="0.45479", D="0.06584", sqrt_D="0.25659", lambda_ann="0.00006", lambda_cyl="8.16555"),
}

# ε -> colunas (h = 1, k = 1)
CYLINDER_TABLE: Dict[float, Dict[str, QuotedValue]] = {
    0.0001: _row(lambda_num="2786.058246", lambda_cont="9.863675", lambda_cyl="9.869604",
                 lambda_cont_minus_cyl="-0.005930", D="1.623593e-7", sqrt_D="0.000403"),
    0.0002: _row(lambda_num="2788.056992", lambda_cont="9.863670", lambda_cyl="9.869604",
                 lambda_cont_minus_cyl="-0.005934", D="6.494371e-7", sqrt_D="0.000806"),
    0.0005: _row(lambda_num="2788.048215", lambda_cont="9.863639", lambda_cyl="9.869604",
                 lambda_cont_minus_cyl="-0.005965", D="4.058982e-6", sqrt_D="0.002015"),
    0.001: _row(lambda_num="2788.016784", lambda_cont="9.863529", lambda_cyl="9.869604",
                lambda_cont_minus_cyl="-0.006076", D="1.623593e-5", sqrt_D="0.004029"),
    0.002: _row(lambda_num="2787.891572", lambda_cont="9.863085", lambda_cyl="9.869604",
                lambda_cont_minus_cyl="-0.006519", D="6.494381e-5", sqrt_D="0.008059"),
    0.005: _row(lambda_num="2787.017380", lambda_cont="9.859992", lambda_cyl="9.869604",
                lambda_cont_minus_cyl="-0.009612", D="4.059022e-4", sqrt_D="0.020147"),
}

# Bandas de aceitação
CLOSED_FORM_BAND = 1e-5
LAMBDA_ANN_BAND = 2e-3
LAMBDA_CYL_BAND = 1e-4
SQRT_D_ABSOLUTE_BAND = 1e-4
LAMBDA_CONT_BAND = 5e-4
DEFICIT_BAND = 0.06
ORACLE_BAND = 1e-10
SLOPE_BAND = 1e-2


def lookup(table: Dict[float, Dict[str, QuotedValue]], key: float) -> Optional[Dict[str, QuotedValue]]:
    """Linha da tabela cuja chave coincide com `key` (comparação relativa 1e-12)."""
    for reference, row in table.items():
        if math.isclose(reference, key, rel_tol=1e-12):
            return row
    return None

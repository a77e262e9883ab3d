from .analyzer import Analyzer, AnalysisResult, analyzer

__all__ = ['Analyzer', 'AnalysisResult', 'analyzer']

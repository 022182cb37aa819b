from classica.models.training_config import TrainingConfig
from classica.models.early_stopping import EarlyStopping
from classica.models.viterbi import viterbi
from classica.models.tagger import TaggerModel, train_tagger, viterbi_decode
from classica.models.morph_classifiers import MorphClassifiers, train_morph_aux
from classica.models.lemmatizer import LemmatizerModel, lemmatize, train_lemmatizer

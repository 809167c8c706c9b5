#!/usr/bin/env python3
"""Regenerate the bundled data files under src/vietext/data/ and demos/data/.

Deterministic (fixed seed).  The gold corpus is verified during generation:
greedy maximum matching with the full bundled dictionary must reproduce
every gold sentence exactly, otherwise generation fails loudly.
"""

from __future__ import annotations

import random
import unicodedata
from pathlib import Path

from wordlists import (
    EN_COMMON,
    EN_STOPWORDS,
    VI_DICTIONARY,
    VI_STOPWORDS,
    VI_SYLLABLES,
)

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "vietext" / "data"
DEMO_DATA = ROOT / "demos" / "data"

SEED = 20240915


def nfc(s: str) -> str:
    return unicodedata.normalize("NFC", s)


def write_lines(path: Path, lines: list[str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(nfc(line) for line in lines) + "\n", encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT)} ({len(lines)} lines)")


# ---------------------------------------------------------------------------
# Sentiment lexicons
# ---------------------------------------------------------------------------

VI_POSITIVE = {
    "tốt": 0.5, "hay": 0.5, "đẹp": 0.6, "giỏi": 0.6, "ngon": 0.6, "thích": 0.5,
    "yêu": 0.7, "vui": 0.6, "mê": 0.6, "ổn": 0.4, "khen": 0.5, "quý": 0.5,
    "mừng": 0.6, "sướng": 0.7, "đỉnh": 0.8, "chuẩn": 0.5, "xịn": 0.7,
    "mượt": 0.5, "êm": 0.4, "bền": 0.4, "sạch": 0.4, "khỏe": 0.5, "tươi": 0.4,
    "ngoan": 0.5, "hiền": 0.4, "lành": 0.4, "thơm": 0.5, "mát": 0.4,
    "tuyệt vời": 0.9, "xuất sắc": 0.9, "tốt đẹp": 0.7, "hài lòng": 0.7,
    "thân thiện": 0.6, "nhiệt tình": 0.6, "chu đáo": 0.6, "tận tâm": 0.7,
    "chuyên nghiệp": 0.6, "hiệu quả": 0.6, "thuận tiện": 0.5, "thoải mái": 0.6,
    "vui vẻ": 0.6, "hạnh phúc": 0.8, "tự hào": 0.6, "yên tâm": 0.5,
    "an toàn": 0.4, "bổ ích": 0.6, "hấp dẫn": 0.6, "thú vị": 0.6,
    "phong phú": 0.5, "đa dạng": 0.4, "rõ ràng": 0.4, "dễ hiểu": 0.5,
    "dễ dàng": 0.4, "nhanh chóng": 0.5, "kịp thời": 0.5, "chính xác": 0.5,
    "đầy đủ": 0.4, "hợp lý": 0.5, "tích cực": 0.6, "chủ động": 0.4,
    "chăm chỉ": 0.5, "cẩn thận": 0.4, "kiên trì": 0.5, "đáng tin": 0.6,
    "tin cậy": 0.6, "tử tế": 0.6, "lịch sự": 0.5, "dễ thương": 0.6,
    "đáng yêu": 0.7, "tuyệt hảo": 0.9, "hoàn hảo": 0.9, "ưng ý": 0.7,
    "mãn nguyện": 0.7, "khích lệ": 0.5, "động viên": 0.5, "tiến bộ": 0.5,
    "thành công": 0.7, "thắng lợi": 0.7, "may mắn": 0.6, "thuận lợi": 0.5,
    "ưu điểm": 0.5, "nổi bật": 0.5, "ấn tượng": 0.6, "đặc sắc": 0.6,
    "sinh động": 0.5, "hữu ích": 0.6, "thiết thực": 0.5, "văn minh": 0.4,
    "hiện đại": 0.4, "thông minh": 0.6, "khéo léo": 0.5, "tài năng": 0.6,
    "xuất chúng": 0.8, "vượt trội": 0.7, "đáng khen": 0.6, "sáng tạo": 0.5,
    "tận tình": 0.6, "niềm nở": 0.6, "ân cần": 0.6, "chu toàn": 0.5,
    "gọn gàng": 0.4, "ngăn nắp": 0.4, "sang trọng": 0.6, "tinh tế": 0.6,
    "độc đáo": 0.6, "mới mẻ": 0.5, "trẻ trung": 0.5, "năng động": 0.5,
    "tự tin": 0.5, "lạc quan": 0.6, "bình yên": 0.5, "ấm áp": 0.6,
    "ngọt ngào": 0.6, "dịu dàng": 0.5, "hào hứng": 0.6, "phấn khởi": 0.6,
    "hân hoan": 0.7, "tưng bừng": 0.5, "rực rỡ": 0.6, "tráng lệ": 0.6,
    "hào phóng": 0.5, "rộng rãi": 0.4, "công bằng": 0.5, "minh bạch": 0.5,
    "trung thực": 0.6, "thẳng thắn": 0.4, "đáng giá": 0.6, "xứng đáng": 0.5,
}
VI_NEGATIVE = {
    "tệ": -0.6, "xấu": -0.5, "kém": -0.5, "dở": -0.6, "chán": -0.5,
    "ghét": -0.7, "sợ": -0.5, "buồn": -0.5, "đau": -0.5, "khổ": -0.6,
    "mệt": -0.4, "bẩn": -0.5, "ồn": -0.4, "hỏng": -0.6, "lỗi": -0.5,
    "sai": -0.4, "thua": -0.5, "hư": -0.5, "vỡ": -0.4, "gãy": -0.4,
    "mất": -0.4, "nhầm": -0.4, "tồi": -0.6, "dốt": -0.6, "điên": -0.5,
    "ác": -0.7, "nát": -0.5, "rách": -0.4, "thối": -0.6, "hôi": -0.5,
    "đắng": -0.3, "chát": -0.3, "tệ hại": -0.8, "tồi tệ": -0.8,
    "thất vọng": -0.7, "khó chịu": -0.6, "chậm chạp": -0.5, "phức tạp": -0.4,
    "bất tiện": -0.5, "lo lắng": -0.5, "buồn bã": -0.6, "tức giận": -0.7,
    "kém cỏi": -0.6, "nghèo nàn": -0.5, "lạc hậu": -0.5, "khó khăn": -0.4,
    "vất vả": -0.4, "mệt mỏi": -0.5, "căng thẳng": -0.5, "nhàm chán": -0.6,
    "đơn điệu": -0.4, "thiếu sót": -0.4, "sai lầm": -0.5, "yếu kém": -0.6,
    "tiêu cực": -0.6, "nguy hiểm": -0.6, "bất mãn": -0.7, "bức xúc": -0.7,
    "phiền phức": -0.6, "rắc rối": -0.5, "lộn xộn": -0.5, "ồn ào": -0.4,
    "thất bại": -0.7, "thô lỗ": -0.7, "gian dối": -0.7, "lừa đảo": -0.9,
    "chậm trễ": -0.5, "trì hoãn": -0.4, "hủy bỏ": -0.4, "từ chối": -0.4,
    "chê bai": -0.6, "phàn nàn": -0.5, "khiếu nại": -0.5, "kêu ca": -0.4,
    "trục trặc": -0.5, "cố chấp": -0.4, "bảo thủ": -0.4, "ích kỷ": -0.6,
    "lười biếng": -0.6, "cẩu thả": -0.6, "vô lý": -0.6, "bất công": -0.6,
    "oan ức": -0.6, "đáng tiếc": -0.5, "tiếc nuối": -0.4, "hối hận": -0.5,
    "xấu hổ": -0.5, "nhục nhã": -0.8, "kinh khủng": -0.8, "khủng khiếp": -0.8,
    "độc hại": -0.7, "bệnh tật": -0.5, "đau đớn": -0.7, "thảm họa": -0.8,
    "khốn khổ": -0.7, "bực mình": -0.6, "khó hiểu": -0.4, "mơ hồ": -0.4,
    "luộm thuộm": -0.5, "nhếch nhác": -0.6, "xuống cấp": -0.5, "hư hỏng": -0.6,
    "quá tải": -0.5, "chật chội": -0.4, "ngột ngạt": -0.5, "oi bức": -0.4,
    "lạnh lùng": -0.5, "thờ ơ": -0.5, "vô tâm": -0.6, "vô dụng": -0.7,
    "lãng phí": -0.5, "tốn kém": -0.4, "đắt đỏ": -0.4, "nghi ngờ": -0.4,
    "bất ổn": -0.5, "hỗn loạn": -0.6, "khủng hoảng": -0.7, "suy thoái": -0.6,
}
VI_NEGATORS = ["không", "chẳng", "chưa", "đừng", "chớ", "chả"]
VI_INTENSIFIERS = {
    "rất": 1.5, "quá": 1.6, "lắm": 1.4, "cực": 1.7, "siêu": 1.7, "thật": 1.3,
    "khá": 1.2, "hơi": 0.7, "cực kỳ": 1.8, "vô cùng": 1.8, "tuyệt đối": 1.8,
    "thật sự": 1.4, "thực sự": 1.4, "hoàn toàn": 1.6, "đặc biệt": 1.4,
}

EN_POSITIVE = {
    "good": 0.5, "great": 0.7, "excellent": 0.9, "amazing": 0.8, "awesome": 0.8,
    "wonderful": 0.8, "fantastic": 0.8, "brilliant": 0.8, "perfect": 0.9,
    "love": 0.7, "like": 0.4, "enjoy": 0.6, "happy": 0.6, "glad": 0.5,
    "pleased": 0.6, "satisfied": 0.6, "helpful": 0.6, "useful": 0.6,
    "friendly": 0.6, "kind": 0.5, "nice": 0.5, "beautiful": 0.7,
    "impressive": 0.7, "outstanding": 0.8, "superb": 0.8, "delightful": 0.7,
    "pleasant": 0.6, "comfortable": 0.5, "convenient": 0.5, "reliable": 0.6,
    "efficient": 0.6, "effective": 0.6, "valuable": 0.6, "interesting": 0.5,
    "engaging": 0.6, "clear": 0.4, "easy": 0.4, "fast": 0.4, "smooth": 0.5,
    "clean": 0.4, "fresh": 0.4, "safe": 0.4, "secure": 0.5, "strong": 0.4,
    "solid": 0.4, "accurate": 0.5, "thorough": 0.5, "professional": 0.6,
    "supportive": 0.6, "generous": 0.6, "honest": 0.6, "fair": 0.5,
    "positive": 0.5, "successful": 0.7, "win": 0.5, "benefit": 0.5,
    "improve": 0.4, "improvement": 0.5, "progress": 0.4, "recommend": 0.6,
    "praise": 0.6, "favorite": 0.6, "best": 0.8, "enjoyable": 0.6,
    "inspiring": 0.7, "innovative": 0.6, "creative": 0.5, "smart": 0.5,
    "talented": 0.6, "skilled": 0.5, "dedicated": 0.6, "passionate": 0.6,
    "exciting": 0.6, "thrilled": 0.7, "grateful": 0.6, "thankful": 0.6,
    "appreciate": 0.5, "remarkable": 0.7, "exceptional": 0.8, "superior": 0.6,
    "flawless": 0.8, "ideal": 0.6, "resourceful": 0.5, "attentive": 0.5,
    "responsive": 0.5, "punctual": 0.4, "affordable": 0.5, "robust": 0.5,
    "intuitive": 0.5, "elegant": 0.6, "seamless": 0.6, "stable": 0.4,
    "polished": 0.5, "vibrant": 0.5, "welcoming": 0.6, "charming": 0.6,
    "refreshing": 0.5, "uplifting": 0.6, "rewarding": 0.6, "memorable": 0.5,
    "trustworthy": 0.7, "courteous": 0.5, "diligent": 0.5, "insightful": 0.6,
    "constructive": 0.5, "encouraging": 0.6, "motivated": 0.5, "proud": 0.5,
    "optimistic": 0.5, "peaceful": 0.5, "cozy": 0.5, "spacious": 0.4,
    "modern": 0.3, "versatile": 0.4, "powerful": 0.4, "rich": 0.4,
    "graceful": 0.5, "lovely": 0.6, "splendid": 0.7, "terrific": 0.7,
}
EN_NEGATIVE = {
    "bad": -0.5, "terrible": -0.8, "awful": -0.8, "horrible": -0.8,
    "poor": -0.5, "worst": -0.9, "worse": -0.5, "hate": -0.8, "dislike": -0.5,
    "disappointing": -0.7, "disappointed": -0.7, "frustrating": -0.7,
    "frustrated": -0.6, "annoying": -0.6, "angry": -0.6, "sad": -0.5,
    "unhappy": -0.6, "upset": -0.6, "boring": -0.5, "dull": -0.4,
    "slow": -0.4, "difficult": -0.4, "confusing": -0.5, "complicated": -0.4,
    "unclear": -0.4, "broken": -0.6, "fail": -0.6, "failure": -0.7,
    "error": -0.5, "mistake": -0.5, "problem": -0.4, "bug": -0.4,
    "crash": -0.6, "wrong": -0.5, "unreliable": -0.6, "inefficient": -0.5,
    "useless": -0.7, "worthless": -0.8, "waste": -0.6, "expensive": -0.4,
    "dirty": -0.5, "messy": -0.5, "noisy": -0.4, "rude": -0.7,
    "unfriendly": -0.6, "dishonest": -0.7, "unfair": -0.6, "negative": -0.5,
    "dangerous": -0.6, "unsafe": -0.6, "risky": -0.4, "weak": -0.4,
    "flawed": -0.5, "inferior": -0.5, "mediocre": -0.5, "inadequate": -0.5,
    "insufficient": -0.4, "lacking": -0.4, "missing": -0.3, "lost": -0.4,
    "damage": -0.5, "damaged": -0.5, "harm": -0.6, "harmful": -0.6,
    "painful": -0.6, "suffering": -0.6, "stress": -0.5, "stressful": -0.6,
    "anxious": -0.5, "worried": -0.5, "fear": -0.5, "afraid": -0.5,
    "scared": -0.5, "dread": -0.6, "disaster": -0.8, "catastrophe": -0.8,
    "crisis": -0.6, "complaint": -0.5, "complain": -0.5, "criticize": -0.5,
    "criticism": -0.4, "reject": -0.5, "refuse": -0.4, "deny": -0.4,
    "ignore": -0.4, "neglect": -0.6, "abandon": -0.6, "betray": -0.8,
    "lie": -0.6, "cheat": -0.7, "fraud": -0.8, "scam": -0.8, "corrupt": -0.7,
    "ugly": -0.6, "disgusting": -0.8, "nasty": -0.7, "offensive": -0.6,
    "insulting": -0.7, "clumsy": -0.4, "chaotic": -0.5, "crowded": -0.3,
    "cramped": -0.4, "faulty": -0.6, "defective": -0.6, "overpriced": -0.5,
    "outdated": -0.4, "obsolete": -0.5, "tedious": -0.5, "exhausting": -0.5,
    "overwhelming": -0.4, "miserable": -0.7, "gloomy": -0.5, "hopeless": -0.7,
    "pointless": -0.6, "careless": -0.5, "reckless": -0.6, "selfish": -0.6,
    "arrogant": -0.6, "hostile": -0.7, "toxic": -0.7, "cruel": -0.8,
    "violent": -0.7, "threatening": -0.6, "suspicious": -0.4, "dubious": -0.4,
}
EN_NEGATORS = ["not", "no", "never", "neither", "nor", "hardly", "barely",
               "scarcely", "cannot", "without"]
EN_INTENSIFIERS = {
    "very": 1.5, "extremely": 1.8, "incredibly": 1.8, "really": 1.4,
    "truly": 1.4, "absolutely": 1.7, "completely": 1.6, "totally": 1.6,
    "highly": 1.5, "quite": 1.2, "rather": 1.1, "pretty": 1.2, "so": 1.3,
    "somewhat": 0.9, "slightly": 0.7, "fairly": 1.1, "remarkably": 1.6,
    "exceptionally": 1.7,
}

# --- Abbreviations used by the sentence splitter ---
VI_ABBREVIATIONS = [
    "TS.", "ThS.", "GS.", "PGS.", "BS.", "DS.", "KS.", "LS.", "CN.", "KTS.",
    "TP.", "Tp.", "Q.", "P.", "ĐC.", "SN.", "STT.", "VD.", "TT.", "UBND.",
    "HĐND.", "THPT.", "THCS.", "ĐH.", "CĐ.", "NXB.", "Tr.", "GĐ.", "PGĐ.", "Ô.",
]
EN_ABBREVIATIONS = [
    "Dr.", "Mr.", "Mrs.", "Ms.", "Prof.", "St.", "Mt.", "vs.", "etc.", "e.g.",
    "i.e.", "cf.", "Jr.", "Sr.", "Inc.", "Ltd.", "Co.", "Corp.", "No.", "Fig.",
    "Vol.", "pp.", "Rev.", "Gen.", "Capt.", "Dept.", "Univ.", "approx.", "est.", "Ave.",
]

# --- Aspect catalogue (keyword lists per language) ---
ASPECTS = {
    "Social": {
        "label_vi": "Xã hội",
        "label_en": "Social",
        "vi": ["xã hội", "cộng đồng", "gia đình", "bạn bè", "con người",
               "văn hóa", "giao tiếp"],
        "en": ["social", "community", "family", "friends", "people",
               "culture", "communication"],
    },
    "Academic": {
        "label_vi": "Học thuật",
        "label_en": "Academic",
        "vi": ["học tập", "giáo dục", "trường học", "nghiên cứu", "kiến thức",
               "bài học", "môn học", "thi cử"],
        "en": ["academic", "education", "school", "research", "knowledge",
               "lesson", "study", "exam"],
    },
    "Environmental": {
        "label_vi": "Môi trường",
        "label_en": "Environmental",
        "vi": ["môi trường", "ô nhiễm", "khí hậu", "thiên nhiên", "rác thải",
               "tái chế", "năng lượng"],
        "en": ["environment", "pollution", "climate", "nature", "waste",
               "recycling", "energy"],
    },
    "Technical": {
        "label_vi": "Kỹ thuật",
        "label_en": "Technical",
        "vi": ["kỹ thuật", "công nghệ", "máy tính", "phần mềm", "thiết bị",
               "hệ thống", "dữ liệu"],
        "en": ["technical", "technology", "computer", "software", "hardware",
               "system", "data"],
    },
}

# --- Related-term suggestion stubs ---
VI_THESAURUS = {
    "học": [("đào tạo", "training"), ("giáo dục", "education"),
            ("nghiên cứu", "research"), ("học tập", "studying")],
    "trường": [("nhà trường", "school"), ("trường học", "school"),
               ("đại học", "university")],
    "công nghệ": [("kỹ thuật", "engineering"), ("máy móc", "machinery"),
                  ("thiết bị", "equipment")],
    "môi trường": [("thiên nhiên", "nature"), ("khí hậu", "climate"),
                   ("sinh thái", "ecology")],
    "xã hội": [("cộng đồng", "community"), ("con người", "people"),
               ("văn hóa", "culture")],
    "kiến thức": [("tri thức", "knowledge"), ("hiểu biết", "understanding"),
                  ("trình độ", "proficiency")],
    "việc làm": [("nghề nghiệp", "career"), ("lao động", "labour"),
                 ("công việc", "work")],
    "sức khỏe": [("y tế", "healthcare"), ("thể chất", "fitness"),
                 ("dinh dưỡng", "nutrition")],
}
EN_THESAURUS = {
    "study": [("learning", "acquiring knowledge"), ("research", "systematic investigation"),
              ("education", "formal instruction"), ("training", "skill development")],
    "school": [("university", "higher education"), ("classroom", "teaching space"),
               ("college", "tertiary institution")],
    "technology": [("engineering", "applied science"), ("software", "computer programs"),
                   ("innovation", "novel methods")],
    "environment": [("nature", "natural world"), ("climate", "weather patterns"),
                    ("ecology", "organism interactions")],
    "society": [("community", "social group"), ("culture", "shared customs"),
                ("public", "general population")],
    "knowledge": [("wisdom", "applied knowledge"), ("understanding", "comprehension"),
                  ("expertise", "specialist skill")],
    "work": [("employment", "paid work"), ("career", "professional path"),
             ("labour", "physical work")],
    "health": [("wellness", "good health"), ("medicine", "medical science"),
               ("fitness", "physical condition")],
}


# ---------------------------------------------------------------------------
# Dictionary assembly
# ---------------------------------------------------------------------------

def build_dictionary() -> list[str]:
    words = set(nfc(w) for w in VI_DICTIONARY)
    # Multi-syllable lexicon/catalogue/thesaurus terms must segment as units.
    for term in list(VI_POSITIVE) + list(VI_NEGATIVE) + list(VI_INTENSIFIERS):
        if " " in term:
            words.add(nfc(term))
    for spec in ASPECTS.values():
        for kw in spec["vi"]:
            if " " in kw:
                words.add(nfc(kw))
    for key, related in VI_THESAURUS.items():
        if " " in key:
            words.add(nfc(key))
        for term, _ in related:
            if " " in term:
                words.add(nfc(term))
    for w in words:
        n = len(w.split(" "))
        assert 2 <= n <= 4, f"dictionary entry {w!r} has {n} syllables"
    return sorted(words)


# ---------------------------------------------------------------------------
# Gold corpus generation (verified against greedy maximum matching)
# ---------------------------------------------------------------------------

def greedy_maxmatch(syllables: list[str], entries: set[str], max_len: int) -> list[str]:
    """Reference greedy segmenter used only to validate the fixture."""
    out = []
    i = 0
    n = len(syllables)
    while i < n:
        match = None
        for k in range(min(max_len, n - i), 1, -1):
            cand = " ".join(s.casefold() for s in syllables[i:i + k])
            if cand in entries:
                match = k
                break
        if match is None:
            out.append(syllables[i])
            i += 1
        else:
            out.append(" ".join(syllables[i:i + match]))
            i += match
    return out


SUBJECTS = [
    "học sinh", "sinh viên", "giáo viên", "phụ huynh", "nhân viên",
    "khách hàng", "chuyên gia", "nhà trường", "cộng đồng", "mọi người",
    "chúng tôi", "bác sĩ", "kỹ sư", "thanh niên", "trẻ em", "đồng nghiệp",
]
VERBS = [
    "tìm hiểu", "sử dụng", "đánh giá", "hoàn thành", "chia sẻ", "trình bày",
    "giới thiệu", "phân tích", "cải thiện", "nâng cao", "chuẩn bị",
    "thực hiện", "theo dõi", "kiểm tra", "áp dụng", "xây dựng",
    "phát triển", "bảo vệ", "nghiên cứu", "trao đổi", "thảo luận",
]
OBJECTS = [
    "bài tập", "tài liệu", "kiến thức", "kỹ năng", "chương trình",
    "hệ thống", "phần mềm", "thiết bị", "dữ liệu", "sản phẩm", "dịch vụ",
    "thông tin", "công nghệ thông tin", "môi trường", "kết quả",
    "phương pháp", "giải pháp", "ngoại ngữ", "tiếng Anh", "từ vựng",
]
PLACES = [
    "tại trường", "ở nhà", "tại lớp học", "trong thư viện", "tại công ty",
    "ở thành phố", "tại địa phương", "trong phòng học",
]
TIMES = [
    "hôm nay", "hôm qua", "ngày mai", "tuần này", "năm nay",
    "thường xuyên", "hiện nay", "mỗi ngày",
]
FEELINGS = [
    "hài lòng", "vui vẻ", "tự hào", "yên tâm", "thoải mái", "hào hứng",
    "lo lắng", "mệt mỏi", "căng thẳng", "thất vọng",
]

TEMPLATES = [
    ("S", "V", "O"),
    ("S", "V", "O", "P"),
    ("S", "V", "O", "T"),
    ("T", "S", "V", "O"),
    ("S", "đã", "V", "O"),
    ("S", "sẽ", "V", "O", "P"),
    ("S", "cần", "V", "O"),
    ("S", "muốn", "V", "O", "T"),
    ("S", "rất", "F", "với", "O"),
    ("S", "cảm thấy", "F", "khi", "V", "O"),
    ("S", "và", "S2", "cùng", "V", "O"),
    ("O", "của", "S", "rất", "F"),
]


def generate_gold(entries: set[str], max_len: int, count: int = 200) -> list[list[str]]:
    rng = random.Random(SEED)
    pools = {"S": SUBJECTS, "S2": SUBJECTS, "V": VERBS, "O": OBJECTS,
             "P": PLACES, "T": TIMES, "F": FEELINGS}
    sentences: list[list[str]] = []
    seen: set[tuple[str, ...]] = set()
    attempts = 0
    while len(sentences) < count:
        attempts += 1
        if attempts > 20000:
            raise RuntimeError("could not generate enough verified sentences")
        template = rng.choice(TEMPLATES)
        words: list[str] = []
        for slot in template:
            if slot in pools:
                words.append(rng.choice(pools[slot]))
            else:
                words.append(slot)  # literal connective
        # Capitalise the first syllable, like running text.
        first = words[0]
        words[0] = first[0].upper() + first[1:]
        key = tuple(words)
        if key in seen:
            continue
        syllables = [s for w in words for s in w.split(" ")]
        if greedy_maxmatch(syllables, entries, max_len) != [w for w in words]:
            continue  # a dictionary entry bridges a word boundary; resample
        seen.add(key)
        sentences.append(words)
    return sentences


# ---------------------------------------------------------------------------
# Reference corpora (Zipf-shaped fixtures)
# ---------------------------------------------------------------------------

def zipf_counts(terms: list[str], top: int) -> list[tuple[str, int]]:
    rows = []
    for rank, term in enumerate(terms, start=1):
        rows.append((term, max(1, round(top / rank))))
    return rows


def build_refcorpus_vi(dictionary: list[str]) -> list[tuple[str, int]]:
    rng = random.Random(SEED + 1)
    terms: list[str] = []
    seen = set()

    def push(t: str) -> None:
        t = nfc(t.casefold())
        if t not in seen:
            seen.add(t)
            terms.append(t)

    for w in VI_STOPWORDS:
        push(w)
    for s in VI_SYLLABLES:
        push(s)
    for w in dictionary:
        push(w)
    syllable_pool = sorted({s for w in dictionary for s in w.split(" ")}
                           | set(VI_SYLLABLES))
    while len(terms) < 5000:
        push(f"{rng.choice(syllable_pool)} {rng.choice(syllable_pool)}")
    return zipf_counts(terms[:5000], top=60000)


def build_refcorpus_en() -> list[tuple[str, int]]:
    terms: list[str] = []
    seen = set()

    def push(t: str) -> None:
        if t not in seen:
            seen.add(t)
            terms.append(t)

    for w in EN_STOPWORDS:
        push(w)
    for w in EN_COMMON:
        push(w)
    for suffix in ("s", "ed", "ing", "ly", "er", "est", "ion", "ness", "ful",
                   "less", "able", "ment", "ish", "ous", "al"):
        for w in EN_COMMON:
            if len(terms) >= 5000:
                break
            push(w + suffix)
    return zipf_counts(terms[:5000], top=60000)


# ---------------------------------------------------------------------------
# Demo corpus
# ---------------------------------------------------------------------------

VI_FEEDBACK = [
    "Giáo viên rất nhiệt tình và thân thiện với học sinh",
    "Chương trình học tập phong phú nhưng bài tập hơi nhiều",
    "Thư viện có nhiều tài liệu bổ ích cho sinh viên",
    "Phòng học chật chội và trang thiết bị đã xuống cấp",
    "Tôi rất hài lòng với phương pháp giảng dạy mới",
    "Học phí quá đắt đỏ so với chất lượng dịch vụ",
    "Môi trường học tập thoải mái và an toàn",
    "Hệ thống đăng ký môn học thường xuyên trục trặc",
    "Các hoạt động cộng đồng giúp sinh viên tự tin hơn",
    "Nhà trường cần cải thiện chất lượng phòng thí nghiệm",
    "Khóa học ngoại ngữ rất hữu ích cho công việc của tôi",
    "Nhân viên hành chính làm việc chậm chạp và thiếu chuyên nghiệp",
    "Tôi học được nhiều kiến thức và kỹ năng thiết thực",
    "Sân trường sạch sẽ nhưng căng tin quá ồn ào",
    "Giáo trình được cập nhật theo công nghệ thông tin hiện đại",
    "Việc theo đuổi tri thức đòi hỏi sự kiên trì mỗi ngày",
    "Tôi thất vọng vì lớp học quá đông và thiếu tương tác",
    "Các buổi thảo luận nhóm rất sinh động và hấp dẫn",
    "Kết quả thi cử phản ánh đúng năng lực của học sinh",
    "Chúng tôi mong muốn nhà trường mở rộng thư viện",
]
EN_FEEDBACK = [
    "The teachers are friendly and always willing to help",
    "Course materials are clear but the workload is heavy",
    "I really enjoy the interactive lessons and group projects",
    "The registration system is slow and often crashes",
    "Excellent library with a wide range of research resources",
    "The classrooms are crowded and the equipment is outdated",
    "Tuition fees are expensive compared with the service quality",
    "The new learning platform is intuitive and reliable",
    "Staff responses to student complaints are disappointing",
    "I feel safe and comfortable on the campus",
]


def english_demo_text() -> str:
    return (
        "Education research increasingly relies on large collections of free-text "
        "survey answers. Students describe their experience in their own words, and "
        "teachers read the answers to improve their lessons. Manual reading does not "
        "scale, so schools need tools that count words, find key terms, and summarise "
        "long answers.\n\n"
        "A useful tool shows which words appear more often than expected, displays "
        "every occurrence of a keyword in context, and ranks the most central "
        "sentences. Sentiment scores add a quick view of how positive or negative "
        "the answers are. With these pieces together, a small team can explore "
        "thousands of answers in an afternoon and still trace every number back to "
        "the original text."
    )


# ---------------------------------------------------------------------------
# Main
# ---------------------------------------------------------------------------

def main() -> None:
    dictionary = build_dictionary()
    entries = {w.casefold() for w in dictionary}
    max_len = max(len(w.split(" ")) for w in dictionary)

    assert len(VI_STOPWORDS) == 100, len(VI_STOPWORDS)
    assert len(EN_STOPWORDS) == 100, len(EN_STOPWORDS)

    write_lines(DATA / "stopwords_vi.txt", VI_STOPWORDS)
    write_lines(DATA / "stopwords_en.txt", EN_STOPWORDS)
    write_lines(DATA / "dictionary_vi.txt",
                ["# Vietnamese multi-syllable words, one per line,"
                 " syllables separated by single spaces"] + dictionary)
    write_lines(DATA / "abbreviations_vi.txt", VI_ABBREVIATIONS)
    write_lines(DATA / "abbreviations_en.txt", EN_ABBREVIATIONS)

    for lang, pos, neg, negators, intens in (
        ("vi", VI_POSITIVE, VI_NEGATIVE, VI_NEGATORS, VI_INTENSIFIERS),
        ("en", EN_POSITIVE, EN_NEGATIVE, EN_NEGATORS, EN_INTENSIFIERS),
    ):
        lines = [f"{t}\t{v}" for t, v in sorted(pos.items())]
        lines += [f"{t}\t{v}" for t, v in sorted(neg.items())]
        lines += [f"NEG\t{t}" for t in negators]
        lines += [f"INT\t{t}\t{v}" for t, v in sorted(intens.items())]
        write_lines(DATA / f"lexicon_{lang}.txt", lines)

    catalogue_lines = ["[vi]"]
    for name, spec in ASPECTS.items():
        catalogue_lines.append(f"{name}\t{spec['label_vi']}\t{','.join(spec['vi'])}")
    catalogue_lines.append("[en]")
    for name, spec in ASPECTS.items():
        catalogue_lines.append(f"{name}\t{spec['label_en']}\t{','.join(spec['en'])}")
    write_lines(DATA / "aspects.txt", catalogue_lines)

    for lang, thesaurus in (("vi", VI_THESAURUS), ("en", EN_THESAURUS)):
        lines = []
        for key, related in thesaurus.items():
            cells = [key] + [f"{term}|{gloss}" for term, gloss in related]
            lines.append("\t".join(cells))
        write_lines(DATA / f"thesaurus_{lang}.txt", lines)

    for lang, rows in (("vi", build_refcorpus_vi(dictionary)), ("en", build_refcorpus_en())):
        total = round(sum(c for _, c in rows) * 1.18)
        name = f"{lang}-fixture-5k"
        lines = [f"refcorpus-v1 {name} {total}"]
        lines += [f"{t}\t{c}" for t, c in rows]
        write_lines(DATA / f"refcorpus_{lang}.txt", lines)

    gold = generate_gold(entries, max_len)
    write_lines(DATA / "gold_vi_200.txt", ["|".join(words) for words in gold])

    # Demo inputs
    csv_lines = ["id,language,feedback"]
    for i, row in enumerate(VI_FEEDBACK, start=1):
        csv_lines.append(f'{i},vi,"{row}"')
    for i, row in enumerate(EN_FEEDBACK, start=len(VI_FEEDBACK) + 1):
        csv_lines.append(f'{i},en,"{row}"')
    write_lines(DEMO_DATA / "feedback.csv", csv_lines)
    (DEMO_DATA / "news_en.txt").write_text(english_demo_text() + "\n", encoding="utf-8")
    print(f"wrote {(DEMO_DATA / 'news_en.txt').relative_to(ROOT)}")

    print(f"dictionary entries: {len(dictionary)}, max syllables: {max_len}")
    print(f"gold sentences: {len(gold)}")


if __name__ == "__main__":
    main()

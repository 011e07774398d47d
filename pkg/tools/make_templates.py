# -*- coding: utf-8 -*-
"""Regenerate the bundled prompt-template files.

Run from the repo root: python3 tools/make_templates.py
"""
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "morphsuite" / "templates"

LABELS = {
    "english": {
        "example": "Example {index}:",
        "root": "Word root: {root}",
        "definition": "Definition: {root} means {definition} in {language}.",
        "affixes": "Affixes: {affixes}",
        "sentence": "Sentence: {sentence}",
        "derived": "Derived word: {derived_word}",
        "answer": "Answer: {answer}",
    },
    "turkish": {
        "example": "Örnek {index}:",
        "root": "Kök: {root}",
        "definition": "Tanım: {root} Türkçe {definition} anlamına gelir.",
        "affixes": "Ekler: {affixes}",
        "sentence": "Cümle: {sentence}",
        "derived": "Türetilmiş kelime: {derived_word}",
        "answer": "Cevap: {answer}",
    },
    "finnish": {
        "example": "Esimerkki {index}:",
        "root": "Sananvartalo: {root}",
        "definition": "Määritelmä: {root} tarkoittaa {definition} kielellä suomi.",
        "affixes": "Päätteet: {affixes}",
        "sentence": "Lause: {sentence}",
        "derived": "Johdettu sana: {derived_word}",
        "answer": "Vastaus: {answer}",
    },
}

I = {}  # (lang, task, dist, variant) -> instruction text

# --- English ---------------------------------------------------------------
I[("english", "productivity", "id", "standard")] = (
    "You are given a word root and a list of affixes (separated by comma) in "
    "{language} and your task is to generate a grammatically correct word from this "
    "root using all the given affixes. You are allowed to use only the given affixes "
    "and each affix only once. Answer with only the generated word."
)
I[("english", "productivity", "ood", "standard")] = (
    "You are given a novel word root with its definition and a list of affixes "
    "(separated by comma) in {language} and your task is to generate a grammatically "
    "correct word from this root using all the given affixes. You are allowed to use "
    "only the given affixes and each affix only once. Answer with only the generated word."
)
I[("english", "systematicity", "id", "standard")] = (
    "You are given a word root, a list of affixes (separated by comma) and a word in "
    "{language} that is derived from the given word root using the given affixes. "
    "Your task is to determine whether the derived word is grammatically correct. "
    "Answer only with Yes or No."
)
I[("english", "systematicity", "ood", "standard")] = (
    "You are given a novel word root with its definition, a list of affixes "
    "(separated by comma) and a word in {language} that is derived from the given "
    "word root using the given affixes. Your task is to determine whether the derived "
    "word is grammatically correct. Answer only with Yes or No."
)
I[("english", "productivity", "id", "context")] = (
    "You are given a word root, a list of affixes (separated by comma) and a sentence "
    "with a blank (___) in {language} and your task is to fill in the blank by "
    "generating a grammatically correct word from this root using all the given "
    "affixes. You are allowed to use only the given affixes and each affix only once. "
    "Answer with only the generated word."
)
I[("english", "productivity", "ood", "context")] = (
    "You are given a novel word root with its definition, a list of affixes "
    "(separated by comma) and a sentence with a blank (___) in {language} and your "
    "task is to fill in the blank by generating a grammatically correct word from "
    "this root using all the given affixes. You are allowed to use only the given "
    "affixes and each affix only once. Answer with only the generated word."
)
I[("english", "systematicity", "id", "context")] = (
    "You are given a word root, a list of affixes (separated by comma), a sentence "
    "with a blank (___) and a word in {language} that is derived from the given word "
    "root using the given affixes. Your task is to determine whether the derived word "
    "is the correct option to fill in the blank. Answer only with Yes or No."
)
I[("english", "systematicity", "ood", "context")] = (
    "You are given a novel word root with its definition, a list of affixes "
    "(separated by comma), a sentence with a blank (___) and a word in {language} "
    "that is derived from the given word root using the given affixes. Your task is "
    "to determine whether the derived word is the correct option to fill in the "
    "blank. Answer only with Yes or No."
)
I[("english", "productivity", "id", "cot")] = (
    "You are given a word root and a list of affixes (separated by comma) in "
    "{language}. Your task is to construct a grammatically correct word by appending "
    "the given affixes to the root. Use each affix exactly once. After forming a "
    "word, list each affix used in the construction of that word to verify adherence "
    "to the rules. Check the following: Ensure no affix is used more than once, "
    "confirm that all provided affixes are used, verify that no extra affixes outside "
    "the provided list are included. Think step by step and then provide your final "
    "answer within the tags <Answer>correctword</Answer>."
)
I[("english", "productivity", "ood", "cot")] = (
    "You are provided with a novel word root with its definition, and a list of "
    "affixes (separated by comma) in {language}. Your task is to construct a "
    "grammatically correct word by appending the given affixes to the root. Use each "
    "affix exactly once. After forming a word, list each affix used in the "
    "construction of that word to verify adherence to the rules. Check the following: "
    "Ensure no affix is used more than once, confirm that all provided affixes are "
    "used, verify that no extra affixes outside the provided list are included. Think "
    "step by step and then provide your final answer within the tags "
    "<Answer>correctword</Answer>."
)
I[("english", "systematicity", "id", "cot")] = (
    "You are given a word root, a list of affixes (separated by comma) and a word in "
    "{language} that is derived from the given word root using the given affixes. "
    "Your task is to determine whether the derived word is grammatically correct. "
    "First, analyze how the affixes interact with the word root. Then, assess the "
    "order in which the affixes are applied and verify that this order adheres to the "
    "language's rules. Think step by step and then provide your final answer within "
    "the tags <Answer>Yes/No</Answer>."
)
I[("english", "systematicity", "ood", "cot")] = (
    "You are given a novel word root with its definition, a list of affixes "
    "(separated by comma) and a word in {language} that is derived from the given "
    "word root using the given affixes. Your task is to determine whether the derived "
    "word is grammatically correct. First, analyze how the affixes interact with the "
    "word root. Then, assess the order in which the affixes are applied and verify "
    "that this order adheres to the language's rules. Think step by step and then "
    "provide your final answer within the tags <Answer>Yes/No</Answer>."
)
I[("english", "productivity", "id", "paraphrased")] = (
    "You are provided with a word root and a set of affixes (comma-separated) in "
    "{language}. Your task is to create a grammatically correct word using this root "
    "and all the provided affixes. You must use only the given affixes, and each "
    "affix can be used only once. Respond with the final word only."
)
I[("english", "productivity", "ood", "paraphrased")] = (
    "You are given a new word root along with its definition, and a set of affixes "
    "(comma-separated) in {language}. Assuming that the new word root is a valid "
    "{language} word, your task is to form a grammatically correct word using this "
    "root and all the provided affixes. You must use only the given affixes, and each "
    "one can be used just once. Provide only the generated word as your answer."
)
I[("english", "systematicity", "id", "paraphrased")] = (
    "You are provided with a word root, a set of affixes (comma-separated), and a "
    "word in {language} that is derived from the given root using the provided "
    "affixes. Your task is to verify whether the derived word is grammatically "
    "correct. Respond with only Yes or No."
)
I[("english", "systematicity", "ood", "paraphrased")] = (
    "You are provided with a new word root along with its definition, a set of "
    "affixes (comma-separated), and a word in {language} that is derived from the "
    "given root using the provided affixes. Assuming that the new word root is a "
    "valid {language} word, your task is to verify whether the derived word is "
    "grammatically correct. Respond with only Yes or No."
)

# --- Turkish ---------------------------------------------------------------
I[("turkish", "productivity", "id", "standard")] = (
    "Size Türkçe bir kök ve bir ek listesi (virgülle ayrılmış) verilecek ve sizden bu "
    "kökten verilen tüm ekleri kullanarak dilbilgisel olarak doğru bir kelime "
    "üretmeniz istenecek. Sadece verilen ekleri kullanabilirsiniz ve her bir ek "
    "sadece bir kez kullanılabilir. Sadece üretilen kelimeyi çıktı olarak verin."
)
I[("turkish", "productivity", "ood", "standard")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması ve bir ek listesi (virgülle ayrılmış) "
    "verilecek ve sizden bu kökten verilen tüm ekleri kullanarak dilbilgisel olarak "
    "doğru bir kelime üretmeniz istenecek. Sadece verilen ekleri kullanabilirsiniz ve "
    "her bir ek sadece bir kez kullanılabilir. Sadece üretilen kelimeyi çıktı olarak verin."
)
I[("turkish", "systematicity", "id", "standard")] = (
    "Size Türkçe bir kök, bir ek listesi (virgülle ayrılmış) ve bu ekleri kullanarak "
    "türetilmiş bir kelime verilecek. Sizden bu kelimenin dilbilgisel olarak doğru "
    "olup olmadığını belirlemeniz istenecek. Sadece Evet veya Hayır ile cevap verin."
)
I[("turkish", "systematicity", "ood", "standard")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması, bir ek listesi (virgülle ayrılmış) "
    "ve bu ekleri kullanarak türetilmiş bir kelime verilecek. Sizden bu kelimenin "
    "dilbilgisel olarak doğru olup olmadığını belirlemeniz istenecek. Sadece Evet "
    "veya Hayır ile cevap verin."
)
I[("turkish", "productivity", "id", "context")] = (
    "Size Türkçe bir kök, bir ek listesi (virgülle ayrılmış) ve boşluklu (___) bir "
    "cümle verilecek ve sizden boşluğu doldurmak için bu kökten verilen tüm ekleri "
    "kullanarak dilbilgisel olarak doğru bir kelime üretmeniz istenecek. Sadece "
    "verilen ekleri kullanabilirsiniz ve her bir ek sadece bir kez kullanılabilir. "
    "Sadece üretilen kelimeyi çıktı olarak verin."
)
I[("turkish", "productivity", "ood", "context")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması, bir ek listesi (virgülle ayrılmış) "
    "ve boşluklu (___) bir cümle verilecek ve sizden boşluğu doldurmak için bu kökten "
    "verilen tüm ekleri kullanarak dilbilgisel olarak doğru bir kelime üretmeniz "
    "istenecek. Sadece verilen ekleri kullanabilirsiniz ve her bir ek sadece bir kez "
    "kullanılabilir. Sadece üretilen kelimeyi çıktı olarak verin."
)
I[("turkish", "systematicity", "id", "context")] = (
    "Size Türkçe bir kök, bir ek listesi (virgülle ayrılmış), boşluklu (___) bir "
    "cümle ve bu ekleri kullanarak türetilmiş bir kelime verilecek. Sizden boşluğu "
    "doldurmak için bu kelimenin dilbilgisel olarak doğru olup olmadığını belirlemeniz "
    "istenecek. Sadece Evet veya Hayır ile cevap verin."
)
I[("turkish", "systematicity", "ood", "context")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması, bir ek listesi (virgülle ayrılmış), "
    "boşluklu (___) bir cümle ve bu ekleri kullanarak türetilmiş bir kelime "
    "verilecek. Sizden boşluğu doldurmak için bu kelimenin dilbilgisel olarak doğru "
    "olup olmadığını belirlemeniz istenecek. Sadece Evet veya Hayır ile cevap verin."
)
I[("turkish", "productivity", "id", "cot")] = (
    "Size Türkçe bir kök ve bir ek listesi (virgülle ayrılmış) verilecek. Göreviniz, "
    "verilen ekleri köke ekleyerek dilbilgisel olarak doğru bir kelime oluşturmaktır. "
    "Her eki tam olarak bir kez kullanın. Kelimeyi oluşturduktan sonra, kurallara "
    "uyulduğunu doğrulamak için kelimenin yapımında kullanılan her eki listeleyin. "
    "Şunları kontrol edin: Hiçbir ekin birden fazla kullanılmadığından emin olun, "
    "verilen tüm eklerin kullanıldığını doğrulayın, listede olmayan ekstra eklerin "
    "kullanılmadığını doğrulayın. Adım adım düşünün ve ardından nihai cevabınızı "
    "<Answer>doğrukelime</Answer> etiketleri içinde verin."
)
I[("turkish", "productivity", "ood", "cot")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması ve bir ek listesi (virgülle ayrılmış) "
    "verilecek. Göreviniz, verilen ekleri köke ekleyerek dilbilgisel olarak doğru bir "
    "kelime oluşturmaktır. Her eki tam olarak bir kez kullanın. Kelimeyi "
    "oluşturduktan sonra, kurallara uyulduğunu doğrulamak için kelimenin yapımında "
    "kullanılan her eki listeleyin. Şunları kontrol edin: Hiçbir ekin birden fazla "
    "kullanılmadığından emin olun, verilen tüm eklerin kullanıldığını doğrulayın, "
    "listede olmayan ekstra eklerin kullanılmadığını doğrulayın. Adım adım düşünün ve "
    "ardından nihai cevabınızı <Answer>doğrukelime</Answer> etiketleri içinde verin."
)
I[("turkish", "systematicity", "id", "cot")] = (
    "Size Türkçe bir kök, bir ek listesi (virgülle ayrılmış) ve bu ekleri kullanarak "
    "türetilmiş bir kelime verilecek. Sizden bu kelimenin dilbilgisel olarak doğru "
    "olup olmadığını belirlemeniz istenecek. Önce eklerin kökle nasıl etkileştiğini "
    "inceleyin. Ardından eklerin uygulanma sırasını değerlendirin ve bu sıranın dilin "
    "kurallarına uyduğunu doğrulayın. Adım adım düşünün ve ardından nihai cevabınızı "
    "<Answer>Evet/Hayır</Answer> etiketleri içinde verin."
)
I[("turkish", "systematicity", "ood", "cot")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması, bir ek listesi (virgülle ayrılmış) "
    "ve bu ekleri kullanarak türetilmiş bir kelime verilecek. Sizden bu kelimenin "
    "dilbilgisel olarak doğru olup olmadığını belirlemeniz istenecek. Önce eklerin "
    "kökle nasıl etkileştiğini inceleyin. Ardından eklerin uygulanma sırasını "
    "değerlendirin ve bu sıranın dilin kurallarına uyduğunu doğrulayın. Adım adım "
    "düşünün ve ardından nihai cevabınızı <Answer>Evet/Hayır</Answer> etiketleri "
    "içinde verin."
)
I[("turkish", "productivity", "id", "paraphrased")] = (
    "Size Türkçe bir kök ve bir ek kümesi (virgülle ayrılmış) verilmektedir. "
    "Göreviniz, bu kökü ve verilen tüm ekleri kullanarak dilbilgisel olarak doğru bir "
    "kelime oluşturmaktır. Yalnızca verilen ekleri kullanmalısınız ve her ek yalnızca "
    "bir kez kullanılabilir. Yalnızca oluşturulan kelimeyle cevap verin."
)
I[("turkish", "productivity", "ood", "paraphrased")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması ve bir ek kümesi (virgülle ayrılmış) "
    "verilmektedir. Yeni kökün geçerli bir Türkçe kelime olduğunu varsayarak, "
    "göreviniz bu kökü ve verilen tüm ekleri kullanarak dilbilgisel olarak doğru bir "
    "kelime oluşturmaktır. Yalnızca verilen ekleri kullanmalısınız ve her ek yalnızca "
    "bir kez kullanılabilir. Cevap olarak yalnızca oluşturulan kelimeyi verin."
)
I[("turkish", "systematicity", "id", "paraphrased")] = (
    "Size Türkçe bir kök, bir ek kümesi (virgülle ayrılmış) ve verilen ekler "
    "kullanılarak bu kökten türetilmiş bir kelime verilmektedir. Göreviniz, "
    "türetilmiş kelimenin dilbilgisel olarak doğru olup olmadığını doğrulamaktır. "
    "Yalnızca Evet veya Hayır ile cevap verin."
)
I[("turkish", "systematicity", "ood", "paraphrased")] = (
    "Size Türkçe yeni bir kök, onun tanımlaması, bir ek kümesi (virgülle ayrılmış) ve "
    "verilen ekler kullanılarak bu kökten türetilmiş bir kelime verilmektedir. Yeni "
    "kökün geçerli bir Türkçe kelime olduğunu varsayarak, göreviniz türetilmiş "
    "kelimenin dilbilgisel olarak doğru olup olmadığını doğrulamaktır. Yalnızca Evet "
    "veya Hayır ile cevap verin."
)

# --- Finnish ---------------------------------------------------------------
I[("finnish", "productivity", "id", "standard")] = (
    "Sinulle annetaan sanan sananvartalo ja luettelo pilkulla erotettuja päätteitä "
    "kielellä suomi. Tehtäväsi on luoda tästä juuresta kieliopillisesti oikea sana "
    "käyttämällä kaikkia annettuja päätteitä. Voit käyttää vain annettuja päätteitä "
    "ja kutakin päätettä vain kerran. Vastaa vain luodulla sanalla."
)
I[("finnish", "productivity", "ood", "standard")] = (
    "Sinulle annetaan uusi sananvartalo, sen määritelmä sekä pilkulla eroteltu "
    "luettelo päätteitä kielellä suomi. Tehtäväsi on luoda juuresta kieliopillisesti "
    "oikea sana käyttämällä kaikkia annettuja päätteitä. Käyttä vain annettuja "
    "päätteitä ja kutakin päätettä vain kerran. Vastaa vain luodulla sanalla."
)
I[("finnish", "systematicity", "id", "standard")] = (
    "Sinulle annetaan sananvartalo, pilkulla eroteltu luettelo päätteistä sekä "
    "annettuja päätteitä käyttämällä vartalosta johdettu sana kielellä suomi. "
    "Tehtäväsi on selvittää, onko johdettu sana kieliopillisesti oikein. Vastaa vain "
    "Kyllä tai Ei."
)
I[("finnish", "systematicity", "ood", "standard")] = (
    "Sinulle annetaan uusi sananvartalo, sen määritelmä sekä pilkulla eroteltu "
    "luettelo päätteistä sekä uusi sana kielellä suomi, joka on johdettu annetusta "
    "sananvartalosta annettujen päätteiden avulla. Tehtäväsi on selvittää, onko "
    "johdettu sana kieliopillisesti oikein. Vastaa vain Kyllä tai Ei."
)
I[("finnish", "productivity", "id", "context")] = (
    "Allaolevassa lauseessa (kirjoitettu kielellä suomi) on tyhjä kohta (___) joka "
    "tulee täyttää kieliopillisesti oikealla sanalla. Alla on myös sananvartalo sekä "
    "pilkulla eroteltu luettelo päätteistä. Tehtäväsi on käyttää vartaloa sekä "
    "päätteitä ja johtaa niistä kieliopillisesti oikein taivutetu sana joka sopii "
    "tyhjään kohtaan lausessaa asiayhteys/konteksti huomioonottaen. Käytä jokaista "
    "päätettä vain kerran. Vastaa vain generoidulla sanalla, älä sano mitään muuta."
)
I[("finnish", "productivity", "ood", "context")] = (
    "Allaolevassa lauseessa (kirjoitettu kielellä suomi) on tyhjä kohta (___) joka "
    "tulee täyttää kieliopillisesti oikealla sanalla. Alla on myös uusi sananvartalo, "
    "sen määritelmä sekä pilkulla eroteltu luettelo päätteistä. Tehtäväsi on käyttää "
    "vartaloa sekä päätteitä ja johtaa niistä kieliopillisesti oikein taivutettu sana "
    "joka sopii tyhjään kohtaan lauseessa asiayhteys/konteksti huomioonottaen. Käytä "
    "jokaista päätettä vain kerran. Vastaa vain generoidulla sanalla, älä sano mitään muuta."
)
I[("finnish", "systematicity", "id", "context")] = (
    "Allaolevassa lauseessa on tyhjä kohta (___) joka tulee täyttää kieliopillisesti "
    "oikealla sanalla. Alla on myös sananvartalo, pilkulla eroteltu luettelo "
    "päätteistä sekä niitä käyttäen annetusta vartalosta johdettu sana kielellä "
    "suomi. Tehtäväsi on päätellä, onko johdettu sana kieliopillisesti oikein, jos "
    "sen asettaa lauseen tyhjään kohtaan eli onko sana kieliopillisesti oikein "
    "taivutetu asiayhteys/konteksti huomioonottaen. Vastaa joko Kyllä tai Ei."
)
I[("finnish", "systematicity", "ood", "context")] = (
    "Allaolevassa lauseessa on tyhjä kohta (___) joka tulee täyttää kieliopillisesti "
    "oikealla sanalla. Alla on myös uusi sananvartalo, sen määritelmä, pilkulla "
    "eroteltu luettelo päätteistä sekä niitä käyttäen annetusta vartalosta johdettu "
    "sana kielellä suomi. Tehtäväsi on päätellä, onko johdettu sana kieliopillisesti "
    "oikein, jos sen asettaa lauseen tyhjään kohtaan eli onko sana kieliopillisesti "
    "oikein taivutettu asiayhteys/konteksti huomioonottaen. Vastaa joko Kyllä tai Ei."
)
I[("finnish", "productivity", "id", "cot")] = (
    "Sinulle annetaan sananvartalo ja luettelo pilkulla erotettuja päätteitä kielellä "
    "suomi. Tehtäväsi on muodostaa kieliopillisesti oikea sana liittämällä annetut "
    "päätteet vartaloon. Käytä kutakin päätettä täsmälleen kerran. Kun olet "
    "muodostanut sanan, luettele jokainen sanan muodostamisessa käytetty pääte "
    "varmistaaksesi sääntöjen noudattamisen. Tarkista seuraavat asiat: varmista, "
    "ettei mitään päätettä käytetä useammin kuin kerran, varmista, että kaikki "
    "annetut päätteet on käytetty, ja varmista, ettei mukana ole ylimääräisiä "
    "päätteitä annetun luettelon ulkopuolelta. Ajattele vaihe vaiheelta ja anna "
    "sitten lopullinen vastauksesi tagien <Answer>oikeasana</Answer> sisällä."
)
I[("finnish", "productivity", "ood", "cot")] = (
    "Sinulle annetaan uusi sananvartalo, sen määritelmä sekä pilkulla eroteltu "
    "luettelo päätteitä kielellä suomi. Tehtäväsi on muodostaa kieliopillisesti oikea "
    "sana liittämällä annetut päätteet vartaloon. Käytä kutakin päätettä täsmälleen "
    "kerran. Kun olet muodostanut sanan, luettele jokainen sanan muodostamisessa "
    "käytetty pääte varmistaaksesi sääntöjen noudattamisen. Tarkista seuraavat asiat: "
    "varmista, ettei mitään päätettä käytetä useammin kuin kerran, varmista, että "
    "kaikki annetut päätteet on käytetty, ja varmista, ettei mukana ole ylimääräisiä "
    "päätteitä annetun luettelon ulkopuolelta. Ajattele vaihe vaiheelta ja anna "
    "sitten lopullinen vastauksesi tagien <Answer>oikeasana</Answer> sisällä."
)
I[("finnish", "systematicity", "id", "cot")] = (
    "Sinulle annetaan sananvartalo, pilkulla eroteltu luettelo päätteistä sekä "
    "annettuja päätteitä käyttämällä vartalosta johdettu sana kielellä suomi. "
    "Tehtäväsi on selvittää, onko johdettu sana kieliopillisesti oikein. Analysoi "
    "ensin, miten päätteet liittyvät sananvartaloon. Arvioi sitten järjestys, jossa "
    "päätteet on liitetty, ja varmista, että tämä järjestys noudattaa kielen "
    "sääntöjä. Ajattele vaihe vaiheelta ja anna sitten lopullinen vastauksesi tagien "
    "<Answer>Kyllä/Ei</Answer> sisällä."
)
I[("finnish", "systematicity", "ood", "cot")] = (
    "Sinulle annetaan uusi sananvartalo, sen määritelmä, pilkulla eroteltu luettelo "
    "päätteistä sekä annettuja päätteitä käyttämällä vartalosta johdettu sana "
    "kielellä suomi. Tehtäväsi on selvittää, onko johdettu sana kieliopillisesti "
    "oikein. Analysoi ensin, miten päätteet liittyvät sananvartaloon. Arvioi sitten "
    "järjestys, jossa päätteet on liitetty, ja varmista, että tämä järjestys "
    "noudattaa kielen sääntöjä. Ajattele vaihe vaiheelta ja anna sitten lopullinen "
    "vastauksesi tagien <Answer>Kyllä/Ei</Answer> sisällä."
)
I[("finnish", "productivity", "id", "paraphrased")] = (
    "Sinulle annetaan sananvartalo sekä joukko päätteitä (pilkulla eroteltuina) "
    "kielellä suomi. Tehtäväsi on muodostaa kieliopillisesti oikea sana käyttämällä "
    "tätä vartaloa ja kaikkia annettuja päätteitä. Saat käyttää vain annettuja "
    "päätteitä, ja kutakin päätettä saa käyttää vain kerran. Vastaa pelkästään "
    "muodostetulla sanalla."
)
I[("finnish", "productivity", "ood", "paraphrased")] = (
    "Sinulle annetaan uusi sananvartalo, sen määritelmä sekä joukko päätteitä "
    "(pilkulla eroteltuina) kielellä suomi. Olettaen, että uusi sananvartalo on "
    "kelvollinen suomen kielen sana, tehtäväsi on muodostaa kieliopillisesti oikea "
    "sana käyttämällä tätä vartaloa ja kaikkia annettuja päätteitä. Saat käyttää vain "
    "annettuja päätteitä, ja kutakin päätettä saa käyttää vain kerran. Anna "
    "vastauksena vain muodostettu sana."
)
I[("finnish", "systematicity", "id", "paraphrased")] = (
    "Sinulle annetaan sananvartalo, joukko päätteitä (pilkulla eroteltuina) sekä sana "
    "kielellä suomi, joka on johdettu annetusta vartalosta annettuja päätteitä "
    "käyttäen. Tehtäväsi on tarkistaa, onko johdettu sana kieliopillisesti oikein. "
    "Vastaa vain Kyllä tai Ei."
)
I[("finnish", "systematicity", "ood", "paraphrased")] = (
    "Sinulle annetaan uusi sananvartalo, sen määritelmä, joukko päätteitä (pilkulla "
    "eroteltuina) sekä sana kielellä suomi, joka on johdettu annetusta vartalosta "
    "annettuja päätteitä käyttäen. Olettaen, että uusi sananvartalo on kelvollinen "
    "suomen kielen sana, tehtäväsi on tarkistaa, onko johdettu sana kieliopillisesti "
    "oikein. Vastaa vain Kyllä tai Ei."
)


def item_block(lang, task, dist, variant):
    lab = LABELS[lang]
    lines = [lab["example"], lab["root"]]
    if dist == "ood":
        lines.append(lab["definition"])
    lines.append(lab["affixes"])
    if variant == "context":
        lines.append(lab["sentence"])
    if task == "systematicity":
        lines.append(lab["derived"])
    lines.append(lab["answer"])
    return "\n".join(lines)


def main():
    count = 0
    for (lang, task, dist, variant), instruction in sorted(I.items()):
        path = OUT / lang / f"{task}_{dist}_{variant}.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        body = (
            "== instruction ==\n"
            + instruction
            + "\n== item ==\n"
            + item_block(lang, task, dist, variant)
            + "\n"
        )
        path.write_text(body, encoding="utf-8")
        count += 1
    print(f"wrote {count} template files under {OUT}")


if __name__ == "__main__":
    main()
